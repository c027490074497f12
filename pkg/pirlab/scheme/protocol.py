import logging
from typing import Iterable

import numpy as np

from pirlab.exceptions import ShapeMismatch
from pirlab.matrix import FpMatrix, column_blocks, select_columns
from pirlab.types import Row

from .model import MessageVector, ResponseVector, SchemeParams, SchemeTable

logger = logging.getLogger(__name__)


def selector_matrix(params: SchemeParams, m: int) -> FpMatrix:
    "The ``Lw x (M * Lw)`` target ``[O | E | O]`` picking block ``m``."
    params.check_message_index(m)
    lw = params.sub_length
    data = np.zeros((lw, params.width), dtype=np.int64)
    data[:, (m - 1) * lw : m * lw] = np.eye(lw, dtype=np.int64)
    return FpMatrix(params.field, data)


def query_blocks(table: SchemeTable, m: int, f: int, server: int, indices: Iterable[int]) -> FpMatrix:
    "Rows of one server restricted to the column blocks of ``indices``."
    return select_columns(table.server_query(m, f, server), column_blocks(indices, table.params.sub_length))


def respond(table: SchemeTable, m: int, f: int, w: MessageVector) -> ResponseVector:
    "Every server's answer ``Q_j @ w`` to the realization ``(m, f)``."
    if w.params != table.params:
        raise ShapeMismatch("message vector does not belong to this scheme")

    stacked = table.query(m, f) @ w.symbols
    answers: list[Row] = []
    for server in table.server_indices:
        rows = table.params.server_rows(server)
        answers.append(tuple(int(v) for v in stacked.data[rows.start : rows.stop, 0]))

    return ResponseVector(table.field, tuple(answers))


def retrieve(table: SchemeTable, m: int, f: int, w: MessageVector, decoder: FpMatrix) -> Row:
    """
    Run one retrieval round trip and decode ``D @ X``.

    The result equals ``w.block(m)`` whenever ``decoder`` solves ``D @ Q = [O | E | O]``
    for this realization.

    Raises:
        ShapeMismatch: if ``decoder`` is not ``Lw x sum(rho_j)``
    """
    expected = (table.params.sub_length, table.params.total_rows)
    if decoder.shape != expected:
        raise ShapeMismatch(f"decoding matrix must be {expected}, got {decoder.shape}")

    response = respond(table, m, f, w)
    decoded = decoder @ response.stacked()
    logger.debug("Decoded m=%d f=%d from %d answer symbols", m, f, table.params.total_rows)
    return tuple(int(v) for v in decoded.data[:, 0])
