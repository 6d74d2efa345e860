"""Matrices indexed by strictly increasing tuples and the wedge product.

An :class:`AltMatrix` in ``M_{n,n'}(p,p')`` (bold M) has one row per
``a in J_n(p)`` and one column per ``a' in J_{n'}(p')``, both in colex order.
``compound(A, k)`` is the classical k-th compound matrix (entries are the
``k x k`` minors).
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from multilin import kernels
from multilin._graded import GradedMatrix
from multilin.errors import DimensionError, SingularMatrixError
from multilin.exactnum import factorial, scale_to_ints
from multilin.linalg import DenseMatrix, det, inverse, matmul_flat
from multilin.multiindex import multi_shuffles, rank_strict, strict_ranks, strict_size, strict_stratum
from multilin.symalg import _plan


class AltMatrix(GradedMatrix):
    __slots__ = ()
    family = "AM"
    stratum_size = staticmethod(strict_size)

    @classmethod
    def from_matrix(cls, m: DenseMatrix | Sequence[Sequence]) -> "AltMatrix":
        if not isinstance(m, DenseMatrix):
            m = DenseMatrix.from_rows(m)
        return cls(m.rows, m.cols, 1, 1, m.data)

    @classmethod
    def column(cls, values: Sequence, n_prime: int | None = None) -> "AltMatrix":
        n = len(values)
        return cls(n, n if n_prime is None else n_prime, 1, 0, values)

    def row_indices(self):
        return strict_stratum(self.n, self.p)

    def col_indices(self):
        return strict_stratum(self.n_prime, self.p_prime)

    def __getitem__(self, key):
        row, col = key
        if isinstance(row, tuple):
            row = rank_strict(row)
            col = rank_strict(col)
        return self.data[row * self.ncols + col]

    def __matmul__(self, other: "AltMatrix") -> "AltMatrix":
        return flat_product(self, other)


def flat_product(a: AltMatrix, b: AltMatrix) -> AltMatrix:
    if a.n_prime != b.n or a.p_prime != b.p:
        raise DimensionError(
            f"flat product needs matching inner stratum: ({a.n_prime}, {a.p_prime}) vs ({b.n}, {b.p})")
    data = matmul_flat(a.data, b.data, a.nrows, a.ncols, b.ncols)
    return AltMatrix(a.n, b.n_prime, a.p, b.p_prime, data)


@lru_cache(maxsize=None)
def wedge_plan(n: int, p: int, q: int):
    """Shuffle plan for one side: ``(out, left, right, sign)`` per (alpha, shuffle)."""
    terms = []
    left = strict_ranks(n, p)
    right = strict_ranks(n, q)
    shuffle_list = multi_shuffles((p, q))
    for r, alpha in enumerate(strict_stratum(n, p + q)):
        for sigma, sign in shuffle_list:
            picked = [alpha[i - 1] for i in sigma.images]
            terms.append((r, left[tuple(picked[:p])], right[tuple(picked[p:])], sign))
    return _plan(terms)


def wedge(a: AltMatrix, b: AltMatrix) -> AltMatrix:
    """``A wedge B``: signed sum over row shuffles and column shuffles."""
    if a.n != b.n or a.n_prime != b.n_prime:
        raise DimensionError(f"wedge needs shared bases, got ({a.n}, {a.n_prime}) and ({b.n}, {b.n_prime})")
    out = AltMatrix(a.n, a.n_prime, a.p + b.p, a.p_prime + b.p_prime)
    if out.nrows == 0 or out.ncols == 0:
        return out
    ia, da = scale_to_ints(a.data)
    ib, db = scale_to_ints(b.data)
    vals = kernels.contract(wedge_plan(a.n, a.p, b.p), wedge_plan(a.n_prime, a.p_prime, b.p_prime),
                            ia, a.ncols, ib, b.ncols, out.nrows, out.ncols)
    den = da * db
    out.data = [Fraction(x, den) for x in vals]
    return out


def multi_wedge(factors: Sequence[AltMatrix], n: int | None = None, n_prime: int | None = None) -> AltMatrix:
    """Left fold of :func:`wedge`; the empty product is the unit (bases must then be given)."""
    if not factors:
        if n is None or n_prime is None:
            raise ValueError("empty wedge product needs explicit bases")
        return AltMatrix.unit(n, n_prime)
    acc = factors[0]
    for f in factors[1:]:
        acc = wedge(acc, f)
    return acc


def wedge_power(a: AltMatrix | DenseMatrix, k: int) -> AltMatrix:
    """``A^{wedge k}``; ``k = 0`` gives the unit."""
    if isinstance(a, DenseMatrix):
        a = AltMatrix.from_matrix(a)
    if k < 0:
        raise ValueError(f"negative power {k}")
    acc = AltMatrix.unit(a.n, a.n_prime)
    for _ in range(k):
        acc = wedge(acc, a)
    return acc


def compound(a: AltMatrix | DenseMatrix, k: int) -> AltMatrix:
    """``A^{wedge k} / k!``: entry ``(rows, cols)`` is the corresponding ``k x k`` minor."""
    if isinstance(a, DenseMatrix):
        a = AltMatrix.from_matrix(a)
    if a.p != 1 or a.p_prime != 1:
        raise DimensionError("compound needs an ordinary matrix (weights (1, 1))")
    return wedge_power(a, k) / factorial(k)


def wedge_vectors(vectors: Sequence[Sequence]) -> AltMatrix:
    """``x^1 wedge ... wedge x^k`` for column vectors of a common length."""
    cols = [AltMatrix.column(v) for v in vectors]
    if not cols:
        raise ValueError("need at least one vector")
    return multi_wedge(cols)


def gl_action_antisym(a: AltMatrix, t: DenseMatrix, p: int | None = None) -> AltMatrix:
    """Change of basis ``T^-1 A compound(T, p)`` for ``A in M_{n,n}(1, p)``."""
    p = a.p_prime if p is None else p
    if a.p != 1 or a.p_prime != p:
        raise DimensionError(f"expected a (1, {p}) matrix, got ({a.p}, {a.p_prime})")
    if t.rows != t.cols or t.rows != a.n or a.n != a.n_prime:
        raise DimensionError(f"T must be {a.n}x{a.n}, got {t.rows}x{t.cols}")
    if det(t) == 0:
        raise SingularMatrixError("T is singular")
    t_inv = AltMatrix.from_matrix(inverse(t))
    return t_inv @ a @ compound(t, p)


def padded_embed_rows(a: AltMatrix, offset: int, total: int) -> AltMatrix:
    if a.p != 1:
        raise DimensionError("padding needs row weight 1")
    if offset < 0 or offset + a.n > total:
        raise ValueError(f"offset {offset} with {a.n} rows does not fit in dimension {total}")
    out = AltMatrix(total, a.n_prime, 1, a.p_prime)
    c = a.ncols
    out.data[offset * c:(offset + a.n) * c] = a.data
    return out


def minor(m: DenseMatrix, rows: Sequence[int], cols: Sequence[int]) -> Fraction:
    """Minor on 1-based ``rows`` x ``cols``."""
    sub = DenseMatrix(len(rows), len(cols), [m[i - 1, j - 1] for i in rows for j in cols])
    return det(sub)


def compound_by_minors(m: DenseMatrix, k: int) -> AltMatrix:
    """Compound matrix computed entry-by-entry from determinants."""
    rows = strict_stratum(m.rows, k)
    cols = strict_stratum(m.cols, k)
    return AltMatrix(m.rows, m.cols, k, k, [minor(m, r, c) for r, c in itertools.product(rows, cols)])
