"""Exact dense linear algebra over the rationals."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from multilin import kernels
from multilin.errors import DimensionError, SingularMatrixError
from multilin.exactnum import ZERO, as_rational, scale_to_ints


class DenseMatrix:
    """An ordinary ``rows x cols`` matrix with Fraction entries (row-major)."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: Iterable):
        data = [as_rational(x) for x in data]
        if rows < 0 or cols < 0 or len(data) != rows * cols:
            raise DimensionError(f"{len(data)} entries do not fill a {rows}x{cols} matrix")
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "DenseMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "DenseMatrix":
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "DenseMatrix":
        m = cls.zeros(n, n)
        for i in range(n):
            m.data[i * n + i] = Fraction(1)
        return m

    @classmethod
    def diag(cls, values: Sequence) -> "DenseMatrix":
        n = len(values)
        m = cls.zeros(n, n)
        for i, v in enumerate(values):
            m.data[i * n + i] = as_rational(v)
        return m

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i * self.cols + j]

    def row(self, i: int) -> list:
        return self.data[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list[list[Fraction]]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "DenseMatrix":
        return DenseMatrix(self.cols, self.rows,
                           [self.data[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)])

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __repr__(self):
        return f"DenseMatrix({self.rows}, {self.cols}, {[str(x) for x in self.data]})"

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "DenseMatrix") -> "DenseMatrix":
        self._check_same_shape(other)
        return DenseMatrix(self.rows, self.cols, [a + b for a, b in zip(self.data, other.data)])

    def __sub__(self, other: "DenseMatrix") -> "DenseMatrix":
        self._check_same_shape(other)
        return DenseMatrix(self.rows, self.cols, [a - b for a, b in zip(self.data, other.data)])

    def __neg__(self):
        return DenseMatrix(self.rows, self.cols, [-a for a in self.data])

    def __mul__(self, scalar) -> "DenseMatrix":
        s = as_rational(scalar)
        return DenseMatrix(self.rows, self.cols, [s * a for a in self.data])

    __rmul__ = __mul__

    def __matmul__(self, other: "DenseMatrix") -> "DenseMatrix":
        return matmul(self, other)

    def is_zero(self) -> bool:
        return not any(self.data)


def matmul_flat(a: list, b: list, n: int, m: int, k: int) -> list[Fraction]:
    """Exact product of flat row-major Fraction lists (``n x m`` by ``m x k``)."""
    ia, da = scale_to_ints(a)
    ib, db = scale_to_ints(b)
    out = kernels.matmul(ia, ib, n, m, k)
    den = da * db
    if den == 1:
        return [Fraction(x) for x in out]
    return [Fraction(x, den) for x in out]


def matmul(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    return DenseMatrix(a.rows, b.cols, matmul_flat(a.data, b.data, a.rows, a.cols, b.cols))


def _require_square(a: DenseMatrix):
    if a.rows != a.cols:
        raise DimensionError(f"square matrix required, got {a.rows}x{a.cols}")


def det(a: DenseMatrix) -> Fraction:
    """Determinant via fraction-free (Bareiss) elimination on the scaled integer matrix."""
    _require_square(a)
    ints, den = scale_to_ints(a.data)
    return Fraction(kernels.bareiss_det(ints, a.rows), den ** a.rows)


def _echelon(rows: list[list[Fraction]]) -> int:
    """Row-reduce in place; return the rank."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    rank = 0
    for c in range(ncols):
        pivot = next((r for r in range(rank, nrows) if rows[r][c] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        inv = 1 / prow[c]
        for r in range(rank + 1, nrows):
            f = rows[r][c]
            if f:
                f *= inv
                rows[r] = [x - f * y for x, y in zip(rows[r], prow)]
        rank += 1
        if rank == nrows:
            break
    return rank


def rank(a: DenseMatrix) -> int:
    return _echelon(a.tolist())


def inverse(a: DenseMatrix) -> DenseMatrix:
    """Gauss-Jordan inverse; raises :class:`SingularMatrixError`."""
    _require_square(a)
    n = a.rows
    aug = [a.row(i) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        pivot = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        aug[c], aug[pivot] = aug[pivot], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            f = aug[r][c]
            if r != c and f:
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return DenseMatrix(n, n, [x for row in aug for x in row[n:]])


def is_upper_triangular(a: DenseMatrix) -> bool:
    return all(a.data[i * a.cols + j] == 0 for i in range(a.rows) for j in range(min(i, a.cols)))


def triangular_spectrum(a: DenseMatrix) -> list[Fraction]:
    """Eigenvalues (with multiplicity) of a square upper-triangular matrix, sorted."""
    _require_square(a)
    if not is_upper_triangular(a):
        raise ValueError("triangular_spectrum needs an upper-triangular matrix")
    return sorted(a.data[i * a.cols + i] for i in range(a.rows))
