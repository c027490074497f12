from pathlib import Path
from typing import Sequence

import pytest

from pirlab.field import FieldSpec
from pirlab.matrix import FpMatrix
from pirlab.reference import build_reference_table
from pirlab.scheme import SchemeParams, SchemeTable

GOLDEN = Path(__file__).parent / "golden"


def make_table(
    p: int,
    servers: int,
    messages: int,
    realizations: dict[int, Sequence[Sequence[Sequence[int]]]],
    *,
    sub_length: int = 1,
    rows_per_server: tuple[int, ...] = (),
) -> SchemeTable:
    "Build a table from ``{m: [query rows for f=0, query rows for f=1, ...]}``."
    params = SchemeParams(
        field=FieldSpec(p),
        servers=servers,
        messages=messages,
        sub_length=sub_length,
        rows_per_server=rows_per_server,
    )
    key_count = len(realizations[1])
    queries = {
        (m, f): FpMatrix.from_rows(params.field, rows, cols=params.width)
        for m, per_key in realizations.items()
        for f, rows in enumerate(per_key)
    }
    return SchemeTable(params, key_count, queries)


@pytest.fixture(scope="session")
def f2() -> FieldSpec:
    return FieldSpec(2)


@pytest.fixture(scope="session")
def f3() -> FieldSpec:
    return FieldSpec(3)


@pytest.fixture(scope="session")
def reference_2_2() -> SchemeTable:
    return build_reference_table(2, 2)


@pytest.fixture(scope="session")
def reference_3_2() -> SchemeTable:
    return build_reference_table(3, 2)


@pytest.fixture(scope="session")
def reference_2_3() -> SchemeTable:
    return build_reference_table(2, 3)
