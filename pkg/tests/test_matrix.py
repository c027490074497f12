import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pirlab.exceptions import BlockOutOfRange, FieldMismatch, NoSolution, ShapeMismatch, Singular
from pirlab.field import FieldSpec
from pirlab.matrix import (
    ColumnBlockIndex,
    FpMatrix,
    column_blocks,
    invert,
    rank,
    select_columns,
    solve_left_factor,
    vandermonde,
)


def brute_force_rank(rows: list[list[int]], p: int) -> int:
    "log_p of the number of distinct vectors in the row space."
    if not rows:
        return 0

    span = {
        tuple(sum(c * row[k] for c, row in zip(coeffs, rows)) % p for k in range(len(rows[0])))
        for coeffs in itertools.product(range(p), repeat=len(rows))
    }
    size, exponent = len(span), 0
    while size > 1:
        size //= p
        exponent += 1

    return exponent


def matrices(p: int, n_rows: int, n_cols: int):
    for entries in itertools.product(range(p), repeat=n_rows * n_cols):
        yield [list(entries[i * n_cols : (i + 1) * n_cols]) for i in range(n_rows)]


@st.composite
def fp_matrices(draw, p: int, max_rows: int = 5, max_cols: int = 5):
    n_rows = draw(st.integers(min_value=1, max_value=max_rows))
    n_cols = draw(st.integers(min_value=1, max_value=max_cols))
    rows = draw(
        st.lists(
            st.lists(st.integers(min_value=0, max_value=p - 1), min_size=n_cols, max_size=n_cols),
            min_size=n_rows,
            max_size=n_rows,
        ),
    )
    return rows


class TestRank:
    @pytest.mark.parametrize(("p", "n_rows", "n_cols"), [(2, 3, 4), (2, 4, 3), (3, 2, 3), (3, 3, 2)])
    def test_matches_brute_force_exhaustively(self, p: int, n_rows: int, n_cols: int):
        field = FieldSpec(p)
        for rows in matrices(p, n_rows, n_cols):
            assert rank(FpMatrix.from_rows(field, rows)) == brute_force_rank(rows, p), rows

    @settings(max_examples=60, deadline=None)
    @given(fp_matrices(5, max_rows=4, max_cols=4))
    def test_matches_brute_force_mod_5(self, rows: list[list[int]]):
        assert rank(FpMatrix.from_rows(FieldSpec(5), rows)) == brute_force_rank(rows, 5)

    @settings(max_examples=80, deadline=None)
    @given(fp_matrices(7, max_rows=6, max_cols=6))
    def test_rank_of_transpose(self, rows: list[list[int]]):
        a = FpMatrix.from_rows(FieldSpec(7), rows)
        assert a.rank() == a.T.rank()

    def test_examples(self, f2: FieldSpec):
        assert rank(FpMatrix.from_rows(f2, [[1, 1], [1, 1]])) == 1
        assert rank(FpMatrix.from_rows(f2, [[1, 0], [0, 1]])) == 2
        assert rank(FpMatrix.zeros(f2, 3, 2)) == 0

    def test_rref_pivots(self, f3: FieldSpec):
        reduced, pivots = FpMatrix.from_rows(f3, [[0, 2, 1], [0, 1, 2]]).rref()

        assert pivots == (1,)
        assert reduced.to_rows() == ((0, 1, 2), (0, 0, 0))


class TestSolveLeftFactor:
    def test_selector_in_row_space(self, f2: FieldSpec):
        a = FpMatrix.from_rows(f2, [[0, 1], [1, 1]])
        b = FpMatrix.from_rows(f2, [[1, 0]])

        d = solve_left_factor(a, b)

        assert d @ a == b
        assert d.to_rows() == ((1, 1),)

    def test_reports_first_unreachable_row(self, f2: FieldSpec):
        a = FpMatrix.from_rows(f2, [[1, 1], [1, 1]])
        b = FpMatrix.from_rows(f2, [[1, 1], [1, 0], [0, 1]])

        with pytest.raises(NoSolution) as exc_info:
            solve_left_factor(a, b)

        assert exc_info.value.row == 1

    def test_identity(self, f3: FieldSpec):
        a = FpMatrix.identity(f3, 3)
        b = FpMatrix.from_rows(f3, [[0, 2, 0]])

        assert solve_left_factor(a, b) == b

    def test_column_mismatch(self, f2: FieldSpec):
        with pytest.raises(ShapeMismatch):
            solve_left_factor(FpMatrix.identity(f2, 2), FpMatrix.identity(f2, 3))

    @settings(max_examples=80, deadline=None)
    @given(fp_matrices(3, max_rows=4, max_cols=4), st.data())
    def test_solution_is_exact_when_target_is_in_row_space(self, rows: list[list[int]], data: st.DataObject):
        field = FieldSpec(3)
        a = FpMatrix.from_rows(field, rows)
        coeffs = data.draw(
            st.lists(st.integers(min_value=0, max_value=2), min_size=a.rows, max_size=a.rows),
        )
        b = FpMatrix.from_rows(field, [coeffs]) @ a

        assert solve_left_factor(a, b) @ a == b


class TestInvert:
    def test_inverse(self):
        field = FieldSpec(5)
        a = FpMatrix.from_rows(field, [[1, 2], [3, 4]])

        assert a @ invert(a) == FpMatrix.identity(field, 2)
        assert invert(a) @ a == FpMatrix.identity(field, 2)

    def test_singular(self, f2: FieldSpec):
        with pytest.raises(Singular):
            invert(FpMatrix.from_rows(f2, [[1, 1], [1, 1]]))

    def test_not_square(self, f2: FieldSpec):
        with pytest.raises(ShapeMismatch):
            invert(FpMatrix.zeros(f2, 2, 3))


class TestVandermonde:
    def test_nodes_0_1_over_f2(self, f2: FieldSpec):
        v = vandermonde([f2(0), f2(1)], 2)

        assert v.to_rows() == ((1, 0), (1, 1))
        assert invert(v).to_rows() == ((1, 0), (1, 1))

    def test_projected_inverse_recovers_projection(self, f3: FieldSpec):
        v = vandermonde([f3(2), f3(0), f3(1)], 3)
        projected = FpMatrix(f3, invert(v).data[1:])

        assert (projected @ v).to_rows() == ((0, 1, 0), (0, 0, 1))

    def test_repeated_nodes_are_singular(self, f3: FieldSpec):
        with pytest.raises(Singular):
            invert(vandermonde([f3(1), f3(1), f3(2)], 3))

    def test_rejects_mixed_fields(self, f2: FieldSpec, f3: FieldSpec):
        with pytest.raises(FieldMismatch):
            vandermonde([f2(1), f3(1)], 2)

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_distinct_nodes_always_invert(self, p: int):
        field = FieldSpec(p)

        for n in range(1, p + 1):
            for nodes in itertools.combinations(field.elements(), n):
                v = vandermonde(nodes, n)
                assert invert(v) @ v == FpMatrix.identity(field, n)


class TestSelectColumns:
    def test_blocks_in_ascending_order(self, f3: FieldSpec):
        a = FpMatrix.from_rows(f3, [[1, 2, 0, 1, 2, 2]])

        selected = select_columns(a, column_blocks([3, 1], 2))

        assert selected.to_rows() == ((1, 2, 2, 2),)

    def test_empty_selection(self, f2: FieldSpec):
        assert select_columns(FpMatrix.identity(f2, 2), []).shape == (2, 0)
        assert rank(select_columns(FpMatrix.identity(f2, 2), [])) == 0

    def test_out_of_range(self, f2: FieldSpec):
        with pytest.raises(BlockOutOfRange):
            select_columns(FpMatrix.identity(f2, 2), [ColumnBlockIndex(3, 1)])


class TestFpMatrix:
    def test_immutable(self, f2: FieldSpec):
        a = FpMatrix.identity(f2, 2)

        with pytest.raises(ValueError):
            a.data[0, 0] = 0

    def test_entries_must_be_residues(self, f2: FieldSpec):
        with pytest.raises(ValueError):
            FpMatrix(f2, np.array([[2]]))

    def test_equality_and_hash(self, f3: FieldSpec):
        a = FpMatrix.from_rows(f3, [[1, 2]])
        b = FpMatrix.from_rows(f3, [[4, 5]])

        assert a == b
        assert len({a, b}) == 1
        assert a != FpMatrix.from_rows(FieldSpec(5), [[1, 2]])

    def test_large_modulus_products_stay_exact(self):
        p = 2_147_483_647
        field = FieldSpec(p)
        a = FpMatrix.from_rows(field, [[p - 1, p - 1, p - 1]])
        b = FpMatrix.from_rows(field, [[p - 1], [p - 1], [p - 1]])

        assert (a @ b).to_rows() == ((3 * (p - 1) ** 2 % p,),)
