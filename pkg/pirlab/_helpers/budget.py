import itertools
from typing import Iterable

from pirlab.config import load_config
from pirlab.exceptions import BudgetExceeded


def enumeration_budget(budget: int | None = None) -> int:
    "Explicit budget, or ``PIR_BUDGET`` / the configured default."
    return budget if budget is not None else load_config().enumeration.budget


def check_budget(factors: Iterable[int], budget: int) -> int:
    """
    Multiply ``factors`` in order and return the product.

    Stops at the first partial product above ``budget`` and raises with it, so the
    remaining factors are never produced.

    Raises:
        BudgetExceeded: when the product exceeds ``budget``
    """
    required = 1
    for factor in factors:
        required *= factor
        if required > budget:
            raise BudgetExceeded(required, budget)

    return required


def cells(*counts: int, base: int, exponent: int) -> Iterable[int]:
    "Lazy factors of ``prod(counts) * base**exponent``."
    return itertools.chain(counts, itertools.repeat(base, exponent))
