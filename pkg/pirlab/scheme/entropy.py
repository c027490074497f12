"""
Exhaustive entropy oracle.

Messages are uniform i.i.d. symbols of F_p and keys are uniform over the table, so
every entropy is computed by enumerating all ``p^(M*Lw)`` message vectors. Results
are exact rationals in units of ``log p``.
"""

import logging
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from pirlab._helpers.budget import cells, check_budget, enumeration_budget
from pirlab.exceptions import NonUniformConditional
from pirlab.matrix import FpMatrix, matmul_mod
from pirlab.types import Row

from .model import SchemeTable

logger = logging.getLogger(__name__)


@lru_cache(maxsize=32)
def message_space(p: int, width: int) -> np.ndarray:
    "All ``p^width`` message vectors as the columns of a ``width x p^width`` array."
    count = p**width
    digits = (np.arange(count, dtype=np.int64)[None, :] // (p ** np.arange(width, dtype=np.int64))[:, None]) % p
    digits.setflags(write=False)
    return digits


def _support_exponent(values: np.ndarray, p: int) -> int:
    """
    ``log_p`` of the support size of the uniform distribution spanned by the columns.

    Raises:
        NonUniformConditional: when the columns are not uniform on a support of size p^k
    """
    if values.shape[0] == 0:
        return 0

    _, counts = np.unique(values.T, axis=0, return_counts=True)
    if counts.min() != counts.max():
        raise NonUniformConditional(f"outcome counts range from {counts.min()} to {counts.max()}")

    size, exponent = len(counts), 0
    while size % p == 0:
        size //= p
        exponent += 1
    if size != 1:
        raise NonUniformConditional(f"support of {len(counts)} outcomes is not a power of {p}")

    return exponent


def _image(rows: FpMatrix, messages: np.ndarray) -> np.ndarray:
    return matmul_mod(rows.data, messages, rows.field.modulus)


def _known_rows(table: SchemeTable, known_messages: Sequence[int]) -> FpMatrix:
    "Selector rows exposing every symbol of the known messages."
    params = table.params
    lw = params.sub_length
    data = np.zeros((lw * len(known_messages), params.width), dtype=np.int64)
    for i, k in enumerate(sorted(known_messages)):
        params.check_message_index(k)
        data[i * lw : (i + 1) * lw, (k - 1) * lw : k * lw] = np.eye(lw, dtype=np.int64)

    return FpMatrix(params.field, data)


def realization_entropy(
    table: SchemeTable,
    m: int,
    f: int,
    targets: Sequence[int],
    given_servers: Sequence[int] = (),
    known_messages: Sequence[int] = (),
    *,
    budget: int | None = None,
) -> Fraction:
    """
    ``H(X_targets | Q = q, X_given, W_known)`` for one realization ``q = Q^(m, f)``.

    Args:
        table (SchemeTable): scheme to measure
        m (int): 1-based message index of the realization
        f (int): key of the realization
        targets (Sequence[int]): 1-based servers whose answers are measured
        given_servers (Sequence[int]): 1-based servers whose answers are conditioned on
        known_messages (Sequence[int]): 1-based message indices revealed to the observer
        budget (int | None): enumeration budget; ``PIR_BUDGET`` when omitted
    """
    p, width = table.field.modulus, table.params.width
    check_budget(cells(base=p, exponent=width), enumeration_budget(budget))

    messages = message_space(p, width)
    target = _image(table.servers_query(m, f, targets), messages)
    condition = np.vstack(
        [
            _image(table.servers_query(m, f, given_servers), messages),
            _image(_known_rows(table, known_messages), messages),
        ],
    )

    joint = _support_exponent(np.vstack([target, condition]), p)
    return Fraction(joint - _support_exponent(condition, p))


def conditional_entropy(
    table: SchemeTable,
    m: int,
    server: int,
    known_messages: Sequence[int] | None = None,
    *,
    budget: int | None = None,
) -> Fraction:
    """
    Average answer entropy of one server while the user retrieves ``W_m``.

    With ``known_messages=None`` this is ``H(X_j | Q_j)``, the per-server download
    entropy: keys sharing the same ``q_j`` are grouped and weighted by their count.
    Otherwise it is ``H(X_j | Q_{1:S}, W_known)`` averaged over every key.

    Raises:
        BudgetExceeded: when ``|keys| * p^(M*Lw)`` exceeds the budget
        NonUniformConditional: when the table is not linear in the messages
    """
    params = table.params
    params.check_message_index(m)
    limit = enumeration_budget(budget)
    check_budget(cells(table.key_count, base=params.field.modulus, exponent=params.width), limit)

    total = Fraction(0)
    if known_messages is None:
        groups = Counter[Row]()
        views: dict[Row, int] = {}
        for f in table.keys:
            flat = tuple(v for row in table.server_query(m, f, server).to_rows() for v in row)
            groups[flat] += 1
            views.setdefault(flat, f)

        for flat, count in groups.items():
            total += count * realization_entropy(table, m, views[flat], [server], budget=limit)

        logger.debug("H(X_%d | Q_%d) for m=%d over %d distinct queries", server, server, m, len(groups))
    else:
        for f in table.keys:
            total += realization_entropy(table, m, f, [server], known_messages=known_messages, budget=limit)

    return total / table.key_count
