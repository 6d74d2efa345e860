"""Matrices indexed by multi-indices and the symmetric product ``odot``.

A :class:`SymMatrix` in ``M_{n,n'}(p,p')`` has one row per weight-``p``
multi-index of length ``n`` and one column per weight-``p'`` multi-index of
length ``n'``, both in graded order.  The ordinary ("flat") product of two
such matrices is taken through that layout.
"""
from __future__ import annotations

from array import array
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from multilin import kernels
from multilin._graded import GradedMatrix
from multilin.errors import DimensionError
from multilin.exactnum import ZERO, factorial, scale_to_ints
from multilin.linalg import DenseMatrix, matmul_flat
from multilin.multiindex import (
    multi_binomial,
    rank_index,
    stratum,
    stratum_ranks,
    stratum_size,
    sub_indices,
)


class SymMatrix(GradedMatrix):
    __slots__ = ()
    family = "M"
    stratum_size = staticmethod(stratum_size)

    # --- construction -----------------------------------------------------

    @classmethod
    def from_matrix(cls, m: DenseMatrix | Sequence[Sequence]) -> "SymMatrix":
        """An ordinary matrix viewed as an element of ``M(1, 1)``."""
        if not isinstance(m, DenseMatrix):
            m = DenseMatrix.from_rows(m)
        return cls(m.rows, m.cols, 1, 1, m.data)

    @classmethod
    def column(cls, values: Sequence, n_prime: int | None = None) -> "SymMatrix":
        """A column vector in ``M_{n,n'}(1, 0)``; ``n'`` defaults to ``n``."""
        n = len(values)
        return cls(n, n if n_prime is None else n_prime, 1, 0, values)

    @classmethod
    def row_vector(cls, values: Sequence, n: int | None = None) -> "SymMatrix":
        """A row vector in ``M_{n,n'}(0, 1)``; ``n`` defaults to ``n'``."""
        n_prime = len(values)
        return cls(n_prime if n is None else n, n_prime, 0, 1, values)

    # --- shape ------------------------------------------------------------

    def row_indices(self):
        return stratum(self.n, self.p)

    def col_indices(self):
        return stratum(self.n_prime, self.p_prime)

    def rebase(self, n: int | None = None, n_prime: int | None = None) -> "SymMatrix":
        """Reinterpret a weight-0 side over another base dimension (it has one index either way)."""
        n = self.n if n is None else n
        n_prime = self.n_prime if n_prime is None else n_prime
        if (n != self.n and self.p != 0) or (n_prime != self.n_prime and self.p_prime != 0):
            raise DimensionError("only a weight-0 side can change its base dimension")
        return SymMatrix(n, n_prime, self.p, self.p_prime, self.data)

    # --- access -----------------------------------------------------------

    def __getitem__(self, key):
        row, col = key
        if isinstance(row, tuple):
            row = rank_index(row)
            col = rank_index(col)
        return self.data[row * self.ncols + col]

    def entry(self, row: Sequence[int], col: Sequence[int]) -> Fraction:
        if len(row) != self.n or sum(row) != self.p or len(col) != self.n_prime or sum(col) != self.p_prime:
            return ZERO
        return self.data[rank_index(row) * self.ncols + rank_index(col)]

    def __matmul__(self, other: "SymMatrix") -> "SymMatrix":
        return flat_product(self, other)


def flat_product(a: SymMatrix, b: SymMatrix) -> SymMatrix:
    """Ordinary product ``M_{n,n'}(p,p') x M_{n',n''}(p',p'') -> M_{n,n''}(p,p'')``."""
    if a.n_prime != b.n or a.p_prime != b.p:
        raise DimensionError(
            f"flat product needs matching inner stratum: ({a.n_prime}, {a.p_prime}) vs ({b.n}, {b.p})")
    data = matmul_flat(a.data, b.data, a.nrows, a.ncols, b.ncols)
    return SymMatrix(a.n, b.n_prime, a.p, b.p_prime, data)


def _plan(rows: list[tuple[int, int, int, int]]):
    return tuple(array("q", col) for col in zip(*rows)) if rows else tuple(array("q") for _ in range(4))


@lru_cache(maxsize=None)
def odot_row_plan(n: int, p: int, q: int):
    terms = []
    ranks = stratum_ranks(n, p)
    ranks_q = stratum_ranks(n, q)
    for r, alpha in enumerate(stratum(n, p + q)):
        for beta in sub_indices(alpha, p):
            rest = tuple(x - y for x, y in zip(alpha, beta))
            terms.append((r, ranks[beta], ranks_q[rest], 1))
    return _plan(terms)


@lru_cache(maxsize=None)
def odot_col_plan(n_prime: int, p_prime: int, q_prime: int):
    terms = []
    ranks = stratum_ranks(n_prime, p_prime)
    ranks_q = stratum_ranks(n_prime, q_prime)
    for c, alpha in enumerate(stratum(n_prime, p_prime + q_prime)):
        for beta in sub_indices(alpha, p_prime):
            rest = tuple(x - y for x, y in zip(alpha, beta))
            terms.append((c, ranks[beta], ranks_q[rest], multi_binomial(alpha, beta)))
    return _plan(terms)


def odot(a: SymMatrix, b: SymMatrix) -> SymMatrix:
    """The symmetric product ``A odot B`` in ``M(p+q, p'+q')``.

    Entry ``(alpha, alpha')`` sums ``binom(alpha', beta') A[beta, beta']
    B[alpha-beta, alpha'-beta']`` over ``beta << alpha`` of weight ``p`` and
    ``beta' << alpha'`` of weight ``p'``.
    """
    if a.n != b.n or a.n_prime != b.n_prime:
        raise DimensionError(f"odot needs shared bases, got ({a.n}, {a.n_prime}) and ({b.n}, {b.n_prime})")
    n, n_prime = a.n, a.n_prime
    out = SymMatrix(n, n_prime, a.p + b.p, a.p_prime + b.p_prime)
    if out.nrows == 0 or out.ncols == 0:
        return out
    ia, da = scale_to_ints(a.data)
    ib, db = scale_to_ints(b.data)
    vals = kernels.contract(odot_row_plan(n, a.p, b.p), odot_col_plan(n_prime, a.p_prime, b.p_prime),
                            ia, a.ncols, ib, b.ncols, out.nrows, out.ncols)
    den = da * db
    out.data = [Fraction(x, den) for x in vals]
    return out


def odot_all(factors: Sequence[SymMatrix]) -> SymMatrix:
    if not factors:
        raise ValueError("odot_all needs at least one factor")
    acc = factors[0]
    for f in factors[1:]:
        acc = odot(acc, f)
    return acc


def odot_power(a: SymMatrix, m: int) -> SymMatrix:
    """``A^(m)``; ``A^(0)`` is the unit."""
    if m < 0:
        raise ValueError(f"negative power {m}")
    acc = SymMatrix.unit(a.n, a.n_prime)
    for _ in range(m):
        acc = odot(acc, a)
    return acc


def sym_power(a: SymMatrix | DenseMatrix, k: int) -> SymMatrix:
    """Normalised power ``A^(k) / k!``."""
    if isinstance(a, DenseMatrix):
        a = SymMatrix.from_matrix(a)
    return odot_power(a, k) / factorial(k)


def padded_embed_rows(a: SymMatrix, offset: int, total: int) -> SymMatrix:
    """Place the rows of ``A in M_{n,n'}(1,p')`` at ``offset..offset+n-1`` of a ``total``-dim space."""
    if a.p != 1:
        raise DimensionError("padding needs row weight 1")
    if offset < 0 or offset + a.n > total:
        raise ValueError(f"offset {offset} with {a.n} rows does not fit in dimension {total}")
    out = SymMatrix(total, a.n_prime, 1, a.p_prime)
    c = a.ncols
    out.data[offset * c:(offset + a.n) * c] = a.data
    return out
