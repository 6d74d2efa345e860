"""Shared storage and linear structure for the two indexed-matrix families."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from multilin.errors import DimensionError
from multilin.exactnum import ZERO, as_rational
from multilin.linalg import DenseMatrix


class GradedMatrix:
    """Dense row-major grid for one ``(p, p')`` stratum over bases ``(n, n')``.

    Subclasses define the index family through ``row_size``/``col_size``.
    """

    __slots__ = ("n", "n_prime", "p", "p_prime", "data")
    family = "?"

    @staticmethod
    def stratum_size(n: int, p: int) -> int:
        raise NotImplementedError

    def __init__(self, n: int, n_prime: int, p: int, p_prime: int, data: Iterable | None = None):
        if min(n, n_prime, p, p_prime) < 0:
            raise DimensionError("dimensions and weights must be nonnegative")
        self.n, self.n_prime, self.p, self.p_prime = n, n_prime, p, p_prime
        size = self.nrows * self.ncols
        if data is None:
            self.data = [ZERO] * size
        else:
            self.data = [as_rational(x) for x in data]
            if len(self.data) != size:
                raise DimensionError(f"{self.family}_{{{n},{n_prime}}}({p},{p_prime}) needs {size} entries, "
                                     f"got {len(self.data)}")

    @classmethod
    def zeros(cls, n, n_prime, p, p_prime):
        return cls(n, n_prime, p, p_prime)

    @classmethod
    def unit(cls, n: int, n_prime: int):
        """The weight-(0, 0) matrix ``[1]``."""
        return cls(n, n_prime, 0, 0, [1])

    @classmethod
    def from_rows(cls, n, n_prime, p, p_prime, rows):
        return cls(n, n_prime, p, p_prime, [x for r in rows for x in r])

    @property
    def nrows(self) -> int:
        return self.stratum_size(self.n, self.p)

    @property
    def ncols(self) -> int:
        return self.stratum_size(self.n_prime, self.p_prime)

    @property
    def signature(self) -> tuple[int, int, int, int]:
        return self.n, self.n_prime, self.p, self.p_prime

    def _new(self, data):
        return type(self)(*self.signature, data)

    def tolist(self) -> list[list[Fraction]]:
        c = self.ncols
        return [self.data[i * c:(i + 1) * c] for i in range(self.nrows)]

    def as_dense(self) -> DenseMatrix:
        return DenseMatrix(self.nrows, self.ncols, self.data)

    def column_values(self) -> list[Fraction]:
        if self.ncols != 1:
            raise DimensionError("not a column vector")
        return list(self.data)

    def is_zero(self) -> bool:
        return not any(self.data)

    def _check_same(self, other):
        if type(other) is not type(self) or self.signature != other.signature:
            raise DimensionError(f"shape mismatch {self.signature} vs {getattr(other, 'signature', other)}")

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.signature == other.signature and self.data == other.data

    def __add__(self, other):
        self._check_same(other)
        return self._new([a + b for a, b in zip(self.data, other.data)])

    def __sub__(self, other):
        self._check_same(other)
        return self._new([a - b for a, b in zip(self.data, other.data)])

    def __neg__(self):
        return self._new([-a for a in self.data])

    def __mul__(self, scalar):
        s = as_rational(scalar)
        return self._new([s * a for a in self.data])

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        s = as_rational(scalar)
        return self._new([a / s for a in self.data])

    def __repr__(self):
        rows = [[str(x) for x in r] for r in self.tolist()]
        return (f"{type(self).__name__}(n={self.n}, n_prime={self.n_prime}, p={self.p}, "
                f"p_prime={self.p_prime}, rows={rows})")
