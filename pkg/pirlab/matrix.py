"""
Dense linear algebra over F_p.

Matrices are immutable wrappers around read-only ``int64`` numpy arrays whose entries
are canonical residues. Moduli stay below 2^31, so a single product of two entries
fits in 62 bits; every routine here reduces after each multiplication and never sums
unreduced products.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .exceptions import BlockOutOfRange, FieldMismatch, NoSolution, ShapeMismatch, Singular
from .field import FieldElement, FieldSpec
from .types import Row

logger = logging.getLogger(__name__)


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    "Exact ``a @ b mod p`` for residue arrays, accumulating one rank-1 term at a time."
    if a.shape[1] != b.shape[0]:
        raise ShapeMismatch(f"cannot multiply {a.shape} by {b.shape}")

    result = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(a.shape[1]):
        result += np.outer(a[:, k], b[k, :]) % p
        result %= p

    return result


def _row_reduce(data: np.ndarray, field: FieldSpec, pivot_limit: int) -> tuple[np.ndarray, list[int]]:
    """
    Reduced row echelon form with first-nonzero pivoting.

    Only the first ``pivot_limit`` columns may hold pivots; the remaining columns are
    carried along as an augmented block.
    """
    p = field.modulus
    work = np.array(data, dtype=np.int64) % p
    n_rows = work.shape[0]
    pivots: list[int] = []
    row = 0

    for col in range(pivot_limit):
        if row == n_rows:
            break

        nonzero = np.flatnonzero(work[row:, col])
        if nonzero.size == 0:
            continue

        found = row + int(nonzero[0])
        if found != row:
            work[[row, found]] = work[[found, row]]

        work[row] = work[row] * field(int(work[row, col])).inverse().value % p
        factors = work[:, col].copy()
        factors[row] = 0
        work = (work - np.outer(factors, work[row]) % p) % p

        pivots.append(col)
        row += 1

    return work, pivots


@dataclass(slots=True, frozen=True, eq=False)
class FpMatrix:
    """
    Immutable dense matrix over F_p.

    Args:
        field (FieldSpec): the field every entry belongs to
        data (numpy.ndarray): 2-d array of canonical residues; copied and frozen on construction
    """

    field: FieldSpec
    data: np.ndarray

    def __post_init__(self):
        array = np.array(self.data, dtype=np.int64, copy=True)
        if array.ndim != 2:
            raise ShapeMismatch(f"expected a 2-d array, got {array.ndim} dimension(s)")
        if array.size and (array.min() < 0 or array.max() >= self.field.modulus):
            raise ValueError(f"entries must be canonical residues of {self.field}")

        array.setflags(write=False)
        object.__setattr__(self, "data", array)

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[int]], cols: int | None = None) -> "FpMatrix":
        "Build a matrix from integer rows, reducing every entry mod p."
        if not rows:
            return cls.zeros(field, 0, cols or 0)

        array = np.array([[int(v) for v in row] for row in rows], dtype=np.int64)
        if cols is not None and array.shape[1] != cols:
            raise ShapeMismatch(f"expected {cols} columns, got {array.shape[1]}")

        return cls(field, array % field.modulus)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "FpMatrix":
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "FpMatrix":
        return cls(field, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return int(self.data.shape[0])

    @property
    def cols(self) -> int:
        return int(self.data.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def entry(self, i: int, j: int) -> FieldElement:
        return FieldElement(int(self.data[i, j]), self.field)

    def to_rows(self) -> tuple[Row, ...]:
        return tuple(tuple(int(v) for v in row) for row in self.data)

    def _check_field(self, other: "FpMatrix"):
        if other.field != self.field:
            raise FieldMismatch(self.field.modulus, other.field.modulus)

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        self._check_field(other)
        return FpMatrix(self.field, matmul_mod(self.data, other.data, self.field.modulus))

    def __add__(self, other: "FpMatrix") -> "FpMatrix":
        self._check_field(other)
        if other.shape != self.shape:
            raise ShapeMismatch(f"cannot add {self.shape} and {other.shape}")

        return FpMatrix(self.field, (self.data + other.data) % self.field.modulus)

    def __sub__(self, other: "FpMatrix") -> "FpMatrix":
        self._check_field(other)
        if other.shape != self.shape:
            raise ShapeMismatch(f"cannot subtract {other.shape} from {self.shape}")

        return FpMatrix(self.field, (self.data - other.data) % self.field.modulus)

    def transpose(self) -> "FpMatrix":
        return FpMatrix(self.field, self.data.T)

    @property
    def T(self) -> "FpMatrix":
        return self.transpose()

    def take_rows(self, indices: Iterable[int]) -> "FpMatrix":
        index = list(indices)
        return FpMatrix(self.field, self.data[index, :] if index else np.zeros((0, self.cols), dtype=np.int64))

    def vstack(self, *others: "FpMatrix") -> "FpMatrix":
        for other in others:
            self._check_field(other)
            if other.cols != self.cols:
                raise ShapeMismatch(f"cannot stack {other.cols} columns under {self.cols}")

        return FpMatrix(self.field, np.vstack([self.data, *(other.data for other in others)]))

    def hstack(self, *others: "FpMatrix") -> "FpMatrix":
        for other in others:
            self._check_field(other)
            if other.rows != self.rows:
                raise ShapeMismatch(f"cannot join {other.rows} rows beside {self.rows}")

        return FpMatrix(self.field, np.hstack([self.data, *(other.data for other in others)]))

    def rref(self) -> tuple["FpMatrix", tuple[int, ...]]:
        "Reduced row echelon form and its pivot columns."
        reduced, pivots = _row_reduce(self.data, self.field, self.cols)
        return FpMatrix(self.field, reduced), tuple(pivots)

    def rank(self) -> int:
        _, pivots = _row_reduce(self.data, self.field, self.cols)
        return len(pivots)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FpMatrix):
            return NotImplemented

        return (
            self.field == other.field
            and self.data.shape == other.data.shape
            and bool(np.array_equal(self.data, other.data))
        )

    def __hash__(self) -> int:
        return hash((self.field.modulus, self.data.shape, self.data.tobytes()))

    def __repr__(self) -> str:
        return f"FpMatrix({self.field}, {[list(row) for row in self.to_rows()]})"


@dataclass(slots=True, frozen=True, order=True)
class ColumnBlockIndex:
    """
    Selects the columns ``(k-1)*Lw .. k*Lw - 1`` (zero-based) of a query matrix.

    Args:
        message_index (int): 1-based message index k
        sub_length (int): sub-symbols per message Lw
    """

    message_index: int
    sub_length: int

    def columns(self) -> range:
        start = (self.message_index - 1) * self.sub_length
        return range(start, start + self.sub_length)


def column_blocks(indices: Iterable[int], sub_length: int) -> frozenset[ColumnBlockIndex]:
    return frozenset(ColumnBlockIndex(k, sub_length) for k in indices)


def rank(a: FpMatrix) -> int:
    return a.rank()


def solve_left_factor(a: FpMatrix, b: FpMatrix) -> FpMatrix:
    """
    Find ``D`` with ``D @ a == b``.

    Every row of ``b`` is solved as ``a.T @ x == row.T``. Free variables are set to
    zero, so the result is the canonical solution read off the reduced row echelon
    form of ``[a.T | b.T]``.

    Raises:
        NoSolution: with the index of the first row of ``b`` outside the row space of ``a``
    """
    a._check_field(b)
    if a.cols != b.cols:
        raise ShapeMismatch(f"left factor needs equal column counts, got {a.cols} and {b.cols}")

    r = a.rows
    augmented = np.hstack([a.data.T, b.data.T])
    reduced, pivots = _row_reduce(augmented, a.field, r)

    inconsistent = np.flatnonzero(reduced[len(pivots) :, r:].any(axis=0))
    if inconsistent.size:
        row = int(inconsistent[0])
        logger.debug("Target row %d is outside the row space of a %dx%d matrix", row, a.rows, a.cols)
        raise NoSolution(row)

    solution = np.zeros((r, b.rows), dtype=np.int64)
    for i, col in enumerate(pivots):
        solution[col] = reduced[i, r:]

    return FpMatrix(a.field, solution.T)


def invert(a: FpMatrix) -> FpMatrix:
    "Inverse of a square matrix; raises :class:`Singular` when it does not exist."
    if a.rows != a.cols:
        raise ShapeMismatch(f"only square matrices can be inverted, got {a.shape}")

    n = a.rows
    reduced, pivots = _row_reduce(np.hstack([a.data, np.eye(n, dtype=np.int64)]), a.field, n)
    if len(pivots) < n:
        raise Singular(f"matrix has rank {len(pivots)} < {n}")

    return FpMatrix(a.field, reduced[:, n:])


def vandermonde(nodes: Sequence[FieldElement], width: int) -> FpMatrix:
    "Rows ``(1, z, z^2, ..., z^(width-1))`` for each node z."
    if width < 1:
        raise ValueError(f"width must be >= 1, got {width}")
    if not nodes:
        raise ValueError("at least one node is required")

    field = nodes[0].field
    for node in nodes:
        if node.field != field:
            raise FieldMismatch(field.modulus, node.field.modulus)

    return FpMatrix.from_rows(field, [[(node**k).value for k in range(width)] for node in nodes])


def select_columns(a: FpMatrix, blocks: Iterable[ColumnBlockIndex]) -> FpMatrix:
    "Concatenate the selected column blocks in ascending message order."
    ordered = sorted(set(blocks))
    columns: list[int] = []
    for block in ordered:
        lw = block.sub_length
        if lw < 1 or a.cols % lw or not 1 <= block.message_index <= a.cols // lw:
            raise BlockOutOfRange(f"block {block.message_index} (Lw={lw}) is outside a matrix with {a.cols} columns")
        if lw != ordered[0].sub_length:
            raise BlockOutOfRange("blocks must share one sub-length")

        columns.extend(block.columns())

    return FpMatrix(a.field, a.data[:, columns] if columns else np.zeros((a.rows, 0), dtype=np.int64))
