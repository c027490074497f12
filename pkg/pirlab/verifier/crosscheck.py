import logging

from pirlab._helpers.budget import cells, check_budget, enumeration_budget
from pirlab._helpers.subsets import subsets
from pirlab.scheme import SchemeTable, query_blocks, realization_entropy

from .report import CrosscheckResult, CrosscheckWitness

logger = logging.getLogger(__name__)


def rank_entropy_crosscheck(table: SchemeTable, *, budget: int | None = None) -> CrosscheckResult:
    """
    Compare ``H(X_j | Q, W_known)`` with ``rank Q_j[unknown blocks]`` cell by cell.

    Every server, realization and set of known messages excluding ``m`` is checked;
    the first disagreement is returned as the witness.

    Raises:
        BudgetExceeded: when ``|keys| * p^(M*Lw)`` exceeds the budget
    """
    params = table.params
    limit = enumeration_budget(budget)
    check_budget(cells(table.key_count, base=params.field.modulus, exponent=params.width), limit)

    checked = 0
    for m, f, _ in table.realizations():
        others = [k for k in table.message_indices if k != m]
        for known in subsets(others):
            unknown = [k for k in table.message_indices if k not in known]
            for j in table.server_indices:
                entropy = realization_entropy(table, m, f, [j], known_messages=known, budget=limit)
                rank = query_blocks(table, m, f, j, unknown).rank()
                checked += 1
                if entropy != rank:
                    logger.info("Entropy %s differs from rank %d at m=%d f=%d server %d", entropy, rank, m, f, j)
                    return CrosscheckResult(
                        passed=False,
                        witness=CrosscheckWitness(m, f, j, known, entropy, rank),
                    )

    logger.debug("Rank and entropy agree on %d cells", checked)
    return CrosscheckResult(passed=True)
