"""
Capacity conditions, checked per realization.

The rank checkers read the conditions off the query matrices. The entropy oracle
evaluates the underlying entropy equalities by enumeration and must reach the same
verdict on every table it can afford.
"""

import logging
from fractions import Fraction
from itertools import combinations, permutations

from pirlab._helpers.budget import cells, check_budget, enumeration_budget
from pirlab._helpers.subsets import subsets
from pirlab.config import load_config
from pirlab.exceptions import InvalidCollusion, SubsetBudgetExceeded
from pirlab.matrix import FpMatrix, column_blocks, select_columns
from pirlab.scheme import SchemeTable, realization_entropy

from .report import CapacityResult, CapacityWitness

logger = logging.getLogger(__name__)


def _check_subset_limit(table: SchemeTable, subset_limit: int | None):
    limit = subset_limit if subset_limit is not None else load_config().enumeration.subset_limit
    if table.params.messages > limit:
        raise SubsetBudgetExceeded(table.params.messages, limit)


def _block_rank(query: FpMatrix, blocks: tuple[int, ...], sub_length: int) -> int:
    return select_columns(query, column_blocks(blocks, sub_length)).rank()


def _complement(table: SchemeTable, known: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(k for k in table.message_indices if k not in known)


def _independent_answers(table: SchemeTable, m: int, f: int, query: FpMatrix) -> CapacityWitness | None:
    "rank Q[I] == sum_j rank Q_j[I] for every I containing m."
    lw, servers = table.params.sub_length, tuple(table.server_indices)
    others = tuple(k for k in table.message_indices if k != m)
    for known in subsets(others):
        blocks = _complement(table, known)
        stacked = _block_rank(query, blocks, lw)
        total = sum(_block_rank(table.server_query(m, f, j), blocks, lw) for j in servers)
        if stacked != total:
            return CapacityWitness(m, f, "independent-answers", servers, blocks, Fraction(stacked), Fraction(total))

    return None


def check_capacity_standard(table: SchemeTable, *, subset_limit: int | None = None) -> CapacityResult:
    """
    For every realization:

    * the interference seen by all servers jointly has the rank of each single server's
      interference (all-zero rows included, so one zero row next to a non-zero one fails);
    * for every set of known messages, the answers are independent: the rank of the
      stacked query over the unknown blocks is the sum of the per-server ranks.

    Raises:
        SubsetBudgetExceeded: when M exceeds the subset limit
    """
    _check_subset_limit(table, subset_limit)
    lw = table.params.sub_length

    for m, f, query in table.realizations():
        others = tuple(k for k in table.message_indices if k != m)
        stacked = _block_rank(query, others, lw)
        for j in table.server_indices:
            own = _block_rank(table.server_query(m, f, j), others, lw)
            if own != stacked:
                return CapacityResult(
                    passed=False,
                    witness=CapacityWitness(m, f, "aligned-interference", (j,), others, Fraction(stacked), Fraction(own)),
                )

        if witness := _independent_answers(table, m, f, query):
            return CapacityResult(passed=False, witness=witness)

    return CapacityResult(passed=True)


def check_capacity_colluding(
    table: SchemeTable,
    collusion: int,
    *,
    subset_limit: int | None = None,
) -> CapacityResult:
    """
    Colluding form: answers stay independent for every set of known messages, and the
    interference of all servers has the summed rank of any ``collusion`` of them.

    Raises:
        InvalidCollusion: unless ``1 <= collusion < S``
        SubsetBudgetExceeded: when M exceeds the subset limit
    """
    if not 1 <= collusion < table.params.servers:
        raise InvalidCollusion(collusion, table.params.servers)

    _check_subset_limit(table, subset_limit)
    lw = table.params.sub_length

    for m, f, query in table.realizations():
        if witness := _independent_answers(table, m, f, query):
            return CapacityResult(passed=False, witness=witness)

        others = tuple(k for k in table.message_indices if k != m)
        stacked = _block_rank(query, others, lw)
        for servers in combinations(table.server_indices, collusion):
            total = sum(_block_rank(table.server_query(m, f, j), others, lw) for j in servers)
            if total != stacked:
                return CapacityResult(
                    passed=False,
                    witness=CapacityWitness(m, f, "aligned-interference", servers, others, Fraction(stacked), Fraction(total)),
                )

    return CapacityResult(passed=True)


def capacity_entropy_oracle(
    table: SchemeTable,
    *,
    budget: int | None = None,
    subset_limit: int | None = None,
) -> CapacityResult:
    """
    Standard capacity conditions evaluated on enumerated entropies, without ranks.

    For every realization ``H(X_j | X_i, W_m, Q) = 0`` for all servers ``i != j``, and
    ``H(X_1..X_S | Q, W_known) = sum_j H(X_j | Q, W_known)`` for every set of known
    messages excluding ``m``.

    Raises:
        BudgetExceeded: when ``M * |keys| * p^(M*Lw)`` exceeds the budget
        SubsetBudgetExceeded: when M exceeds the subset limit
    """
    _check_subset_limit(table, subset_limit)
    params = table.params
    limit = enumeration_budget(budget)
    check_budget(cells(params.messages, table.key_count, base=params.field.modulus, exponent=params.width), limit)
    servers = tuple(table.server_indices)

    for m, f, _ in table.realizations():
        others = tuple(k for k in table.message_indices if k != m)
        for i, j in permutations(servers, 2):
            residual = realization_entropy(table, m, f, [j], [i], [m], budget=limit)
            if residual != 0:
                return CapacityResult(
                    passed=False,
                    witness=CapacityWitness(m, f, "aligned-interference", (i, j), others, residual, Fraction(0)),
                )

        for known in subsets(others):
            joint = realization_entropy(table, m, f, servers, known_messages=known, budget=limit)
            total = sum(
                (realization_entropy(table, m, f, [j], known_messages=known, budget=limit) for j in servers),
                start=Fraction(0),
            )
            if joint != total:
                blocks = _complement(table, known)
                return CapacityResult(
                    passed=False,
                    witness=CapacityWitness(m, f, "independent-answers", servers, blocks, joint, total),
                )

    logger.debug("Entropy oracle confirms the capacity conditions on %d realizations", params.messages * table.key_count)
    return CapacityResult(passed=True)
