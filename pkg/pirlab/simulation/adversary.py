import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from pirlab._helpers.text import format_indices, format_rows
from pirlab.exceptions import InvalidParameters
from pirlab.scheme import SchemeTable
from pirlab.types import Observation
from pirlab.verifier import posterior

from .prng import SplitMix64

logger = logging.getLogger(__name__)


@dataclass(slots=True, frozen=True)
class AdversaryView:
    """
    What a coalition of servers learns from one retrieval.

    Args:
        servers (tuple[int, ...]): colluding servers
        observation (Observation): query rows they received
        posterior (tuple[Fraction, ...]): exact ``Pr(theta = m | observation)`` for each m
        actual (int): the index the user really retrieved
    """

    servers: tuple[int, ...]
    observation: Observation
    posterior: tuple[Fraction, ...]
    actual: int

    def render(self) -> str:
        lines = [f"colluding: {format_indices(self.servers)}"]
        lines += [f"observed[{j}]: {format_rows(rows)}" for j, rows in zip(self.servers, self.observation, strict=True)]
        lines += [
            f"posterior: {' '.join(str(p) for p in self.posterior)}",
            f"actual: {self.actual}",
        ]
        return "\n".join(lines) + "\n"


def simulate_adversary(table: SchemeTable, servers: Sequence[int], seed: int) -> AdversaryView:
    """
    Draw ``m`` uniformly, then a key, and compute the coalition's posterior by key counting.

    Raises:
        InvalidParameters: when ``servers`` is empty, repeats a server or leaves ``[1:S]``
    """
    coalition = tuple(sorted(servers))
    if not coalition or len(set(coalition)) != len(coalition):
        raise InvalidParameters(f"colluding servers must be distinct and non-empty, got {list(servers)}")
    if any(not 1 <= j <= table.params.servers for j in coalition):
        raise InvalidParameters(f"colluding servers must lie in [1:{table.params.servers}]")

    rng = SplitMix64(seed)
    m = rng.randbelow(table.params.messages) + 1
    f = rng.randbelow(table.key_count)
    observation = table.observation(m, f, coalition)
    logger.debug("Coalition %s observes realization m=%d f=%d", coalition, m, f)

    return AdversaryView(
        servers=coalition,
        observation=observation,
        posterior=posterior(table, coalition, observation),
        actual=m,
    )
