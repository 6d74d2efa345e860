"""Seeded random instances for property checks."""
from __future__ import annotations

import random
from fractions import Fraction

from multilin.antisym import AltMatrix
from multilin.linalg import DenseMatrix, matmul
from multilin.polymap import PolyMap
from multilin.symalg import SymMatrix


def rational(rng: random.Random, bound: int = 5, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))


def nonzero_rational(rng: random.Random, bound: int = 5, max_den: int = 3) -> Fraction:
    while True:
        x = rational(rng, bound, max_den)
        if x:
            return x


def vector(rng, n, **kw) -> list[Fraction]:
    return [rational(rng, **kw) for _ in range(n)]


def dense(rng, rows, cols, **kw) -> DenseMatrix:
    return DenseMatrix(rows, cols, [rational(rng, **kw) for _ in range(rows * cols)])


def sym(rng, n, n_prime, p, p_prime, **kw) -> SymMatrix:
    m = SymMatrix(n, n_prime, p, p_prime)
    m.data = [rational(rng, **kw) for _ in m.data]
    return m


def alt(rng, n, n_prime, p, p_prime, **kw) -> AltMatrix:
    m = AltMatrix(n, n_prime, p, p_prime)
    m.data = [rational(rng, **kw) for _ in m.data]
    return m


def upper_triangular(rng, n, **kw) -> DenseMatrix:
    m = dense(rng, n, n, **kw)
    for i in range(n):
        for j in range(i):
            m.data[i * n + j] = Fraction(0)
    return m


def invertible(rng, n, **kw) -> DenseMatrix:
    """Product of unit lower and upper triangular factors with a nonzero diagonal."""
    lower = DenseMatrix.identity(n)
    upper = DenseMatrix.identity(n)
    for i in range(n):
        for j in range(n):
            if j < i:
                lower.data[i * n + j] = rational(rng, **kw)
            elif j > i:
                upper.data[i * n + j] = rational(rng, **kw)
            else:
                upper.data[i * n + j] = nonzero_rational(rng, **kw)
    return matmul(lower, upper)


def of_rank(rng, rows, cols, r, **kw) -> DenseMatrix:
    """A ``rows x cols`` matrix of rank exactly ``r`` (``r <= min(rows, cols)``)."""
    left = dense(rng, rows, r, **kw)
    right = dense(rng, r, cols, **kw)
    # force full rank factors by planting an identity block
    for i in range(r):
        for j in range(r):
            left.data[i * r + j] = Fraction(int(i == j))
            right.data[i * cols + j] = Fraction(int(i == j))
    perm_rows = list(range(rows))
    rng.shuffle(perm_rows)
    m = matmul(left, right)
    return DenseMatrix(rows, cols, [m.data[i * cols + j] for i in perm_rows for j in range(cols)])


def polymap(rng, n_in, n_out, degree, density: float = 1.0, **kw) -> PolyMap:
    blocks = {}
    for k in range(degree + 1):
        blk = sym(rng, n_out, n_in, 1, k, **kw)
        if density < 1:
            blk.data = [x if rng.random() < density else Fraction(0) for x in blk.data]
        blocks[k] = blk
    return PolyMap(n_in, n_out, blocks)
