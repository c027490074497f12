from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Iterable

from pirlab.types import Row


def format_decimal(value: Fraction, places: int = 6) -> str:
    "Exact decimal rendering of a rational, rounded half-even."
    with localcontext() as ctx:
        ctx.prec = 64
        quotient = Decimal(value.numerator) / Decimal(value.denominator)
        return str(quotient.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN))


def format_row(row: Row) -> str:
    return " ".join(str(v) for v in row)


def format_rows(rows: Iterable[Row]) -> str:
    "Rows separated by `` | ``, used when a server answers with several symbols."
    return " | ".join(format_row(row) for row in rows)


def format_indices(indices: Iterable[int]) -> str:
    return ",".join(str(i) for i in indices) or "-"
