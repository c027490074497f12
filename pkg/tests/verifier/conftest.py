import pytest

from pirlab.matrix import FpMatrix
from pirlab.scheme import SchemeTable


def replace_rows(table: SchemeTable, m: int, f: int, rows: list[list[int]]) -> SchemeTable:
    return table.with_query(m, f, FpMatrix.from_rows(table.field, rows))


@pytest.fixture
def lost_desired_symbol(reference_2_2: SchemeTable) -> SchemeTable:
    "Server 1 stops asking for w_1 under (m=1, f=2)."
    return replace_rows(reference_2_2, 1, 2, [[0, 0], [1, 1]])


@pytest.fixture
def duplicated_row(reference_2_2: SchemeTable) -> SchemeTable:
    "Both servers receive the same row under (m=2, f=3)."
    return replace_rows(reference_2_2, 2, 3, [[1, 1], [1, 1]])


@pytest.fixture
def misaligned_interference(reference_2_2: SchemeTable) -> SchemeTable:
    "Server 2 drops the interference term under (m=1, f=2); decoding still works."
    return replace_rows(reference_2_2, 1, 2, [[0, 1], [1, 0]])
