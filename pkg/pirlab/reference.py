"""
The capacity-achieving reference scheme.

With ``p = S`` and ``Lw = S - 1``, server ``j`` receives one row made of power blocks
``(v, v^2, ..., v^(S-1))``: the shared interference value ``Z_k`` for every undesired
message ``k`` and its own evaluation point ``z_j`` for the desired message ``m``.
Every answer is then ``beta + sum_t z_j^t w_{m,t}``, a polynomial in ``z_j`` whose
constant term ``beta`` is the common interference, so a Vandermonde inverse recovers
``W_m`` from the ``S`` answers.
"""

import itertools
import logging
from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence

from ._helpers.budget import check_budget
from .config import load_config
from .exceptions import InvalidParameters, Singular
from .field import FieldElement, FieldSpec, validate_field
from .matrix import FpMatrix, invert, vandermonde
from .scheme import SchemeParams, SchemeTable
from .types import Row

logger = logging.getLogger(__name__)


@dataclass(slots=True, frozen=True)
class ReferenceKey:
    """
    One key of the reference scheme.

    Args:
        interference (tuple[int, ...]): ``Z_k`` for the ``M - 1`` undesired messages, ascending k
        nodes (tuple[int, ...]): permutation of F_p assigning ``z_j`` to server ``j``
    """

    interference: tuple[int, ...]
    nodes: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.nodes)) != len(self.nodes):
            raise InvalidParameters(f"evaluation points must be distinct, got {self.nodes}")


def reference_key_count(servers: int, messages: int) -> int:
    "``p^(M-1) * S!`` keys per message index."
    return servers ** (messages - 1) * factorial(servers)


def _key_count_factors(servers: int, messages: int) -> Iterator[int]:
    yield from itertools.repeat(servers, messages - 1)
    yield from range(2, servers + 1)


def reference_keys(servers: int, messages: int) -> list[ReferenceKey]:
    "Keys in generation order: interference values outer, permutations inner, both lexicographic."
    elements = range(servers)
    return [
        ReferenceKey(interference, nodes)
        for interference in itertools.product(elements, repeat=messages - 1)
        for nodes in itertools.permutations(elements)
    ]


def power_block(value: FieldElement, length: int) -> Row:
    "``(v, v^2, ..., v^length)``; the zero vector for ``v = 0``."
    return tuple((value**t).value for t in range(1, length + 1))


def reference_row(field: FieldSpec, messages: int, m: int, key: ReferenceKey, server: int) -> Row:
    lw = field.modulus - 1
    interference = iter(key.interference)
    row: list[int] = []
    for k in range(1, messages + 1):
        value = key.nodes[server - 1] if k == m else next(interference)
        row.extend(power_block(field(value), lw))

    return tuple(row)


def build_reference_table(servers: int, messages: int, budget: int | None = None) -> SchemeTable:
    """
    Enumerate every realization of the reference scheme.

    Args:
        servers (int): server count S, which is also the field size
        messages (int): message count M
        budget (int | None): key-count budget; ``PIR_REFERENCE_BUDGET`` when omitted

    Raises:
        NotPrime: if ``servers`` is not prime
        BudgetExceeded: if ``S^(M-1) * S!`` exceeds the budget
    """
    field = validate_field(servers)
    check_budget(
        _key_count_factors(servers, messages),
        budget if budget is not None else load_config().enumeration.reference_budget,
    )
    params = SchemeParams(field=field, servers=servers, messages=messages, sub_length=servers - 1)

    keys = reference_keys(servers, messages)
    queries = {
        (m, f): FpMatrix.from_rows(
            field,
            [reference_row(field, messages, m, key, j) for j in range(1, servers + 1)],
            cols=params.width,
        )
        for m in range(1, messages + 1)
        for f, key in enumerate(keys)
    }

    logger.info("Built reference scheme S=%d M=%d with %d keys", servers, messages, len(keys))
    return SchemeTable(params, len(keys), queries)


def _check_reference_shape(table: SchemeTable):
    params = table.params
    if (
        params.field.modulus != params.servers
        or params.sub_length != params.servers - 1
        or any(count != 1 for count in params.rows_per_server)
    ):
        raise InvalidParameters(f"not a reference-shaped scheme: {params.describe()}")


def evaluation_points(table: SchemeTable, m: int, f: int) -> list[FieldElement]:
    "``z_1 .. z_S`` read back from the first column of block ``m``."
    _check_reference_shape(table)
    column = (m - 1) * table.params.sub_length
    query = table.query(m, f)
    return [query.entry(j, column) for j in range(table.params.servers)]


def reference_decoder(table: SchemeTable, m: int, f: int) -> FpMatrix:
    """
    ``D_m = P @ V^-1`` where ``V`` is the Vandermonde matrix of the evaluation points
    and ``P`` drops the first coordinate (the interference term).
    """
    nodes = evaluation_points(table, m, f)
    try:
        inverse = invert(vandermonde(nodes, table.params.servers))
    except Singular as exc:
        raise Singular(f"evaluation points of m={m}, f={f} are not distinct") from exc

    return FpMatrix(table.field, inverse.data[1:])


def interference_term(table: SchemeTable, key: ReferenceKey, m: int, symbols: Sequence[int]) -> int:
    "``beta``: the common interference every server adds for the realization ``(m, key)``."
    field, lw = table.field, table.params.sub_length
    undesired = [k for k in table.message_indices if k != m]
    total = 0
    for k, z in zip(undesired, key.interference, strict=True):
        block = symbols[(k - 1) * lw : k * lw]
        total += sum(a * b for a, b in zip(power_block(field(z), lw), block, strict=True))

    return total % field.modulus
