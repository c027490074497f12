import logging
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from pirlab.exceptions import InvalidCollusion, InvalidParameters
from pirlab.scheme import SchemeTable
from pirlab.types import Observation

from .report import PrivacyResult, PrivacyWitness

logger = logging.getLogger(__name__)


def query_counts(table: SchemeTable, servers: Sequence[int]) -> dict[Observation, tuple[int, ...]]:
    """
    How many keys make ``servers`` observe each realized query, per message index.

    Observations appear in the order they are first realized, m-major then f-major.
    """
    counts: dict[Observation, list[int]] = {}
    for m, f, _ in table.realizations():
        observation = table.observation(m, f, servers)
        counts.setdefault(observation, [0] * table.params.messages)[m - 1] += 1

    return {observation: tuple(per_m) for observation, per_m in counts.items()}


def posterior(table: SchemeTable, servers: Sequence[int], observation: Observation) -> tuple[Fraction, ...]:
    "``Pr(theta = m | Q_servers = observation)`` under a uniform prior on m and uniform keys."
    try:
        counts = query_counts(table, servers)[observation]
    except KeyError:
        raise InvalidParameters("observation is never realized by this table") from None

    total = sum(counts)
    return tuple(Fraction(count, total) for count in counts)


def check_privacy_colluding(table: SchemeTable, collusion: int) -> PrivacyResult:
    """
    Every ``collusion``-subset of servers must see each realized query equally often for every m.

    A passing result lists each distinct ``(count_m, total)`` pair, where ``total`` counts
    every ``(m, f)`` producing the observation and equals ``M * count_m``.
    """
    if not 1 <= collusion <= table.params.servers:
        raise InvalidCollusion(collusion, table.params.servers)

    classes: set[tuple[int, int]] = set()
    for servers in combinations(table.server_indices, collusion):
        for observation, counts in query_counts(table, servers).items():
            if len(set(counts)) > 1:
                logger.info("Servers %s distinguish message indices: counts %s", servers, counts)
                return PrivacyResult(
                    passed=False,
                    collusion=collusion,
                    witness=PrivacyWitness(servers, observation, counts, sum(counts)),
                )
            classes.add((counts[0], sum(counts)))

    return PrivacyResult(passed=True, collusion=collusion, classes=tuple(sorted(classes)))


def check_privacy_standard(table: SchemeTable) -> PrivacyResult:
    return check_privacy_colluding(table, 1)
