"""
Small reference points for the verifier: schemes that are correct but leak the index,
private but wasteful, or independent of the index altogether.
"""

import logging
from typing import Sequence

from .field import validate_field
from .matrix import FpMatrix
from .scheme import SchemeParams, SchemeTable, selector_matrix

logger = logging.getLogger(__name__)


def build_plaintext_table(p: int, servers: int, messages: int, sub_length: int = 1) -> SchemeTable:
    "One key; every server is asked for ``W_m`` in the clear."
    params = SchemeParams(
        field=validate_field(p),
        servers=servers,
        messages=messages,
        sub_length=sub_length,
        rows_per_server=(sub_length,) * servers,
    )
    queries: dict[tuple[int, int], FpMatrix] = {}
    for m in range(1, messages + 1):
        selector = selector_matrix(params, m)
        queries[(m, 0)] = selector.vstack(*([selector] * (servers - 1)))

    return SchemeTable(params, 1, queries)


def build_download_all_table(p: int, servers: int, messages: int, sub_length: int = 1) -> SchemeTable:
    "One key; every server returns every symbol it stores, whatever the index."
    width = messages * sub_length
    params = SchemeParams(
        field=validate_field(p),
        servers=servers,
        messages=messages,
        sub_length=sub_length,
        rows_per_server=(width,) * servers,
    )
    identity = FpMatrix.identity(params.field, width)
    stacked = identity.vstack(*([identity] * (servers - 1)))
    return SchemeTable(params, 1, {(m, 0): stacked for m in range(1, messages + 1)})


def build_constant_table(params: SchemeParams, queries: Sequence[FpMatrix]) -> SchemeTable:
    "Key ``f`` sends ``queries[f]`` for every message index."
    logger.debug("Constant table with %d keys: %s", len(queries), params.describe())
    return SchemeTable(
        params,
        len(queries),
        {(m, f): query for m in range(1, params.messages + 1) for f, query in enumerate(queries)},
    )
