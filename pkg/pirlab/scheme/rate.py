import logging
from dataclasses import dataclass
from fractions import Fraction

from pirlab.exceptions import InvalidCollusion, ZeroDownload

from .entropy import conditional_entropy
from .model import SchemeTable

logger = logging.getLogger(__name__)


@dataclass(slots=True, frozen=True)
class RateResult:
    """
    Exact rate of a scheme next to its capacity benchmark.

    Args:
        rate (Fraction): ``min_m Lw / sum_j H(X_j | Q_j)``, entropies in units of ``log p``
        per_m_download (tuple[Fraction, ...]): total download entropy for each message index
        capacity (Fraction): capacity of standard PIR with the same S and M
        achieves (bool): whether ``rate == capacity`` exactly
    """

    rate: Fraction
    per_m_download: tuple[Fraction, ...]
    capacity: Fraction
    achieves: bool


def capacity_formula(servers: int, messages: int, collusion: int = 1) -> Fraction:
    "``(1 - T/S) / (1 - (T/S)^M)``; ``T = 1`` is standard PIR."
    if not 1 <= collusion < servers:
        raise InvalidCollusion(collusion, servers)
    if messages < 1:
        raise ValueError(f"message count must be >= 1, got {messages}")

    ratio = Fraction(collusion, servers)
    return (1 - ratio) / (1 - ratio**messages)


def download_entropy(table: SchemeTable, m: int, *, budget: int | None = None) -> Fraction:
    "``sum_j H(X_j | Q_j)`` while retrieving ``W_m``."
    return sum(
        (conditional_entropy(table, m, server, budget=budget) for server in table.server_indices),
        start=Fraction(0),
    )


def rate_exact(table: SchemeTable, *, budget: int | None = None) -> RateResult:
    """
    Rate of the scheme measured with the enumeration oracle.

    Raises:
        BudgetExceeded: when the enumeration is too large
        ZeroDownload: when some message index downloads nothing
    """
    params = table.params
    downloads = tuple(download_entropy(table, m, budget=budget) for m in table.message_indices)
    for m, download in enumerate(downloads, start=1):
        if download == 0:
            raise ZeroDownload(f"no answer carries information while retrieving m={m}")

    rate = min(Fraction(params.sub_length) / download for download in downloads)
    capacity = capacity_formula(params.servers, params.messages)
    logger.info("Rate %s against capacity %s", rate, capacity)
    return RateResult(rate=rate, per_m_download=downloads, capacity=capacity, achieves=rate == capacity)
