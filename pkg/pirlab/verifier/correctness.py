import logging

from pirlab.exceptions import CorrectnessUnavailable, NoSolution
from pirlab.matrix import FpMatrix, solve_left_factor
from pirlab.scheme import SchemeTable, selector_matrix

from .report import CorrectnessResult, CorrectnessWitness

logger = logging.getLogger(__name__)


def decoding_matrix(table: SchemeTable, m: int, f: int) -> FpMatrix:
    "``D`` with ``D @ Q^(m, f) = [O | E | O]``; raises :class:`CorrectnessUnavailable` when none exists."
    try:
        return solve_left_factor(table.query(m, f), selector_matrix(table.params, m))
    except NoSolution as exc:
        raise CorrectnessUnavailable(m, f) from exc


def check_correctness(table: SchemeTable) -> CorrectnessResult:
    """
    Solve ``D @ Q = [O | E | O]`` for every realization.

    Stops at the first realization whose query rows do not span the selector and
    reports the first unreachable sub-symbol.
    """
    decoders: dict[tuple[int, int], FpMatrix] = {}
    selectors = {m: selector_matrix(table.params, m) for m in table.message_indices}

    for m, f, query in table.realizations():
        try:
            decoders[(m, f)] = solve_left_factor(query, selectors[m])
        except NoSolution as exc:
            logger.info("No decoding matrix for m=%d f=%d (sub-symbol %d)", m, f, exc.row + 1)
            return CorrectnessResult(passed=False, witness=CorrectnessWitness(m, f, exc.row + 1))

    return CorrectnessResult(passed=True, decoders=decoders)
