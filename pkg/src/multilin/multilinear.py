"""Matrix representations of symmetric and alternating multilinear maps.

A symmetric map ``A: V^p -> V'`` is represented by ``A in M_{n',n}(1, p)``
with ``A(x^1, ..., x^p) = A (x^1 odot ... odot x^p) / p!``; an alternating map
by ``A in M_{n',n}(1, p)`` (bold) with ``A(x^1, ..., x^p) = A (x^1 wedge ...
wedge x^p)``.  Products of two such maps through a bilinear pairing ``C`` are
again matrices: ``C (A_top odot B_bottom)`` and ``C (A_top wedge B_bottom)``,
where the factors are padded into the concatenated codomain.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from multilin.antisym import AltMatrix, multi_wedge
from multilin.antisym import padded_embed_rows as alt_padded
from multilin.antisym import wedge
from multilin.errors import DimensionError
from multilin.exactnum import as_rational
from multilin.multiindex import multi_shuffles, permutation_sign, rank_index, stratum, strict_stratum
from multilin.symalg import SymMatrix, odot, odot_all, padded_embed_rows


def _column(values, n_prime=None) -> SymMatrix:
    return SymMatrix.column([as_rational(v) for v in values], n_prime)


def _check_args(arity: int, dim: int, args: Sequence[Sequence]):
    if len(args) != arity:
        raise DimensionError(f"map of arity {arity} called with {len(args)} arguments")
    for x in args:
        if len(x) != dim:
            raise DimensionError(f"argument of length {len(x)}, expected {dim}")


# --- tensors -------------------------------------------------------------

def tensor_get(t, idx: Sequence[int]):
    for i in idx:
        t = t[i]
    return t


def tensor_build(shape: Sequence[int], fn):
    """Nested-list tensor with ``t[i0][i1]... = fn((i0, i1, ...))``."""
    def build(prefix, rest):
        if not rest:
            return fn(tuple(prefix))
        return [build(prefix + [i], rest[1:]) for i in range(rest[0])]
    return build([], list(shape))


def oracle_eval_from_tensor(coeffs, args: Sequence[Sequence], n_out: int | None = None) -> list[Fraction]:
    """``out[i] = sum_j coeffs[i][j1]...[jp] x^1[j1] ... x^p[jp]`` by nested loops."""
    n_out = len(coeffs) if n_out is None else n_out
    dims = [len(x) for x in args]
    args = [[as_rational(v) for v in x] for x in args]
    out = []
    for i in range(n_out):
        total = Fraction(0)
        for js in itertools.product(*(range(d) for d in dims)):
            c = tensor_get(coeffs[i], js)
            if c:
                term = as_rational(c)
                for x, j in zip(args, js):
                    term *= x[j]
                total += term
        out.append(total)
    return out


# --- map types -----------------------------------------------------------

@dataclass(frozen=True, eq=True)
class SymMultiMap:
    arity: int
    matrix: SymMatrix

    def __post_init__(self):
        if self.matrix.p != 1 or self.matrix.p_prime != self.arity:
            raise DimensionError(f"symmetric {self.arity}-linear map needs an M(1, {self.arity}) matrix")

    @property
    def dim_in(self) -> int:
        return self.matrix.n_prime

    @property
    def dim_out(self) -> int:
        return self.matrix.n

    @classmethod
    def from_tensor(cls, coeffs, arity: int, dim_in: int) -> "SymMultiMap":
        """Matrix of the symmetrisation of ``coeffs`` (``[out][j1]...[jp]``).

        Column ``alpha`` is ``alpha!`` times the sum of the coefficients over all
        index tuples with content ``alpha``.
        """
        dim_out = len(coeffs)
        cols = stratum(dim_in, arity)
        data = []
        for i in range(dim_out):
            for alpha in cols:
                base = [j for j, a in enumerate(alpha) for _ in range(a)]
                orderings = set(itertools.permutations(base))
                total = sum((as_rational(tensor_get(coeffs[i], js)) for js in orderings), Fraction(0))
                data.append(total * _multi_factorial(alpha))
        return cls(arity, SymMatrix(dim_out, dim_in, 1, arity, data))

    def __call__(self, *args):
        return eval_sym(self, args)


@dataclass(frozen=True, eq=True)
class AltMultiMap:
    arity: int
    matrix: AltMatrix

    def __post_init__(self):
        if self.matrix.p != 1 or self.matrix.p_prime != self.arity:
            raise DimensionError(f"alternating {self.arity}-linear map needs an M(1, {self.arity}) matrix")

    @property
    def dim_in(self) -> int:
        return self.matrix.n_prime

    @property
    def dim_out(self) -> int:
        return self.matrix.n

    @classmethod
    def from_tensor(cls, coeffs, arity: int, dim_in: int) -> "AltMultiMap":
        """Matrix of the antisymmetrisation of ``coeffs``; for alternating input, ``A[i, J] = coeffs[i][J]``."""
        dim_out = len(coeffs)
        data = []
        perms = [(perm, permutation_sign(perm)) for perm in itertools.permutations(range(arity))]
        for i in range(dim_out):
            for cols in strict_stratum(dim_in, arity):
                js = [c - 1 for c in cols]
                total = Fraction(0)
                for perm, sign in perms:
                    total += sign * as_rational(tensor_get(coeffs[i], [js[k] for k in perm]))
                data.append(total / factorial(arity))
        return cls(arity, AltMatrix(dim_out, dim_in, 1, arity, data))

    def __call__(self, *args):
        return eval_alt(self, args)


def _multi_factorial(alpha) -> int:
    out = 1
    for a in alpha:
        out *= factorial(a)
    return out


def eval_sym(m: SymMultiMap, args: Sequence[Sequence]) -> list[Fraction]:
    """``A (x^1 odot ... odot x^p) / p!``."""
    _check_args(m.arity, m.dim_in, args)
    if m.arity == 0:
        prod = SymMatrix.unit(m.dim_in, m.dim_in)
    else:
        prod = odot_all([_column(x) for x in args])
    return ((m.matrix @ prod) / factorial(m.arity)).data


def eval_alt(m: AltMultiMap, args: Sequence[Sequence]) -> list[Fraction]:
    """``A (x^1 wedge ... wedge x^p)``."""
    _check_args(m.arity, m.dim_in, args)
    cols = [AltMatrix.column([as_rational(v) for v in x]) for x in args]
    prod = multi_wedge(cols, m.dim_in, m.dim_in)
    return (m.matrix @ prod).data


# --- bilinear pairings ---------------------------------------------------

@dataclass(frozen=True, eq=True)
class BilinearMap:
    """``C(x', x'') = C ((x', 0) odot (0, x''))`` with ``C in M_{n''', n'+n''}(1, 2)``.

    Only the cross columns ``e_i + e_{n'+j}`` of ``C`` enter the pairing.
    """

    matrix: SymMatrix
    split: int

    def __post_init__(self):
        m = self.matrix
        if m.p != 1 or m.p_prime != 2:
            raise DimensionError("a bilinear pairing needs an M(1, 2) matrix")
        if not 0 <= self.split <= m.n_prime:
            raise DimensionError(f"split {self.split} outside 0..{m.n_prime}")

    @property
    def dims(self) -> tuple[int, int]:
        return self.split, self.matrix.n_prime - self.split

    @property
    def dim_out(self) -> int:
        return self.matrix.n

    @classmethod
    def from_tensor(cls, coeffs, n1: int, n2: int) -> "BilinearMap":
        """From ``coeffs[k][i][j]``, the ``k``-th output coefficient of ``x'_i x''_j``."""
        total = n1 + n2
        dim_out = len(coeffs)
        m = SymMatrix(dim_out, total, 1, 2)
        c = m.ncols
        for k in range(dim_out):
            for i in range(n1):
                for j in range(n2):
                    alpha = [0] * total
                    alpha[i] += 1
                    alpha[n1 + j] += 1
                    m.data[k * c + rank_index(alpha)] = as_rational(coeffs[k][i][j])
        return cls(m, n1)

    @classmethod
    def from_function(cls, fn, n1: int, n2: int) -> "BilinearMap":
        """Tabulate a bilinear function on basis vectors."""
        e1 = [[int(i == a) for i in range(n1)] for a in range(n1)]
        e2 = [[int(j == b) for j in range(n2)] for b in range(n2)]
        vals = [[fn(x, y) for y in e2] for x in e1]
        dim_out = len(vals[0][0]) if n1 and n2 else 0
        coeffs = [[[vals[i][j][k] for j in range(n2)] for i in range(n1)] for k in range(dim_out)]
        if not coeffs:
            raise ValueError("cannot infer the output dimension of an empty pairing")
        return cls.from_tensor(coeffs, n1, n2)

    def __call__(self, x1: Sequence, x2: Sequence) -> list[Fraction]:
        n1, n2 = self.dims
        if len(x1) != n1 or len(x2) != n2:
            raise DimensionError(f"pairing takes vectors of lengths {n1} and {n2}")
        left = _column(list(x1) + [0] * n2)
        right = _column([0] * n1 + list(x2))
        return (self.matrix @ odot(left, right)).data

    def cross_alt(self) -> AltMatrix:
        """``C`` restated on ``J_{n'+n''}(2)`` via ``e_i + e_j <-> (i, j)``."""
        m = self.matrix
        total = m.n_prime
        pairs = strict_stratum(total, 2)
        out = AltMatrix(m.n, total, 1, 2)
        for k in range(m.n):
            for r, (i, j) in enumerate(pairs):
                alpha = [0] * total
                alpha[i - 1] += 1
                alpha[j - 1] += 1
                out.data[k * len(pairs) + r] = m.data[k * m.ncols + rank_index(alpha)]
        return out


def _check_chain(a, b, c: BilinearMap):
    if a.dim_in != b.dim_in:
        raise DimensionError(f"factors have different domains: {a.dim_in} vs {b.dim_in}")
    if c.dims != (a.dim_out, b.dim_out):
        raise DimensionError(f"pairing takes {c.dims}, factors give ({a.dim_out}, {b.dim_out})")


def product_sym(a: SymMultiMap, b: SymMultiMap, c: BilinearMap) -> SymMultiMap:
    """Matrix of ``A x_C B``: ``C (A_top odot B_bottom)``."""
    _check_chain(a, b, c)
    total = a.dim_out + b.dim_out
    top = padded_embed_rows(a.matrix, 0, total)
    bottom = padded_embed_rows(b.matrix, a.dim_out, total)
    return SymMultiMap(a.arity + b.arity, c.matrix @ odot(top, bottom))


def product_alt(a: AltMultiMap, b: AltMultiMap, c: BilinearMap) -> AltMultiMap:
    """Matrix of ``A wedge_C B``: ``C (A_top wedge B_bottom)``."""
    _check_chain(a, b, c)
    total = a.dim_out + b.dim_out
    top = alt_padded(a.matrix, 0, total)
    bottom = alt_padded(b.matrix, a.dim_out, total)
    return AltMultiMap(a.arity + b.arity, c.cross_alt() @ wedge(top, bottom))


def product_sym_by_definition(a: SymMultiMap, b: SymMultiMap, c: BilinearMap,
                              args: Sequence[Sequence]) -> list[Fraction]:
    """``(1/(p+q)!) sum_{sigma in S_{p+q}} C(A(x_sigma front), B(x_sigma back))``."""
    _check_chain(a, b, c)
    p, q = a.arity, b.arity
    _check_args(p + q, a.dim_in, args)
    total = [Fraction(0)] * c.dim_out
    for perm in itertools.permutations(range(p + q)):
        xs = [args[i] for i in perm]
        val = c(eval_sym(a, xs[:p]), eval_sym(b, xs[p:]))
        total = [s + v for s, v in zip(total, val)]
    return [s / factorial(p + q) for s in total]


def product_alt_by_definition(a: AltMultiMap, b: AltMultiMap, c: BilinearMap,
                              args: Sequence[Sequence]) -> list[Fraction]:
    """``sum_{sigma in S_[p]+[q]} sign(sigma) C(A(x_sigma front), B(x_sigma back))``."""
    _check_chain(a, b, c)
    p, q = a.arity, b.arity
    _check_args(p + q, a.dim_in, args)
    total = [Fraction(0)] * c.dim_out
    for sigma, sign in multi_shuffles((p, q)):
        xs = [args[i - 1] for i in sigma.images]
        val = c(eval_alt(a, xs[:p]), eval_alt(b, xs[p:]))
        total = [s + sign * v for s, v in zip(total, val)]
    return total


# --- pairings on a single space ------------------------------------------

def symmetric_pairing(c_sym: SymMatrix) -> BilinearMap:
    """General form of ``C(x', y') = C_sym (x' odot y') / 2!``."""
    if c_sym.p != 1 or c_sym.p_prime != 2:
        raise DimensionError("symmetric pairing matrix must be M(1, 2)")
    n = c_sym.n_prime

    def fn(x, y):
        return ((c_sym @ odot(_column(x), _column(y))) / 2).data

    return BilinearMap.from_function(fn, n, n)


def alternating_pairing(c_alt: AltMatrix) -> BilinearMap:
    """General form of ``C(x', y') = C_alt (x' wedge y')``."""
    if c_alt.p != 1 or c_alt.p_prime != 2:
        raise DimensionError("alternating pairing matrix must be M(1, 2)")
    n = c_alt.n_prime

    def fn(x, y):
        return (c_alt @ wedge(AltMatrix.column(x), AltMatrix.column(y))).data

    return BilinearMap.from_function(fn, n, n)


def product_sym_same_space(a: SymMultiMap, b: SymMultiMap, c_sym: SymMatrix) -> SymMultiMap:
    """Shortcut for a symmetric pairing on ``V' x V'``: ``(1/2!) C (A odot B)``."""
    if a.dim_out != b.dim_out or c_sym.n_prime != a.dim_out:
        raise DimensionError("shortcut needs both factors valued in the pairing's space")
    return SymMultiMap(a.arity + b.arity, (c_sym @ odot(a.matrix, b.matrix)) / 2)


def product_alt_same_space(a: AltMultiMap, b: AltMultiMap, c_alt: AltMatrix) -> AltMultiMap:
    """Shortcut for an alternating pairing on ``V' x V'``: ``C (A wedge B)``."""
    if a.dim_out != b.dim_out or c_alt.n_prime != a.dim_out:
        raise DimensionError("shortcut needs both factors valued in the pairing's space")
    return AltMultiMap(a.arity + b.arity, c_alt @ wedge(a.matrix, b.matrix))
