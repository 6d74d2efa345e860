import random
from fractions import Fraction

import pytest
import sympy

from multilin import randgen as rg
from multilin.errors import DimensionError, WeightLimitError
from multilin.linalg import DenseMatrix
from multilin.multiindex import stratum
from multilin.oracles import poly_eval_monomial
from multilin.polymap import (
    BlockMatrix,
    PolyMap,
    change_of_variables,
    compose,
    eval_map,
    exp_block,
    exp_vector,
    gl_action_homogeneous,
    invert_affine,
)
from multilin.symalg import SymMatrix


def to_sympy(phi, xs):
    """Each output coordinate as an expanded sympy polynomial in ``xs``."""
    out = []
    for i in range(phi.n_out):
        expr = sympy.Integer(0)
        for k, blk in phi.blocks.items():
            for j, alpha in enumerate(stratum(phi.n_in, k)):
                c = blk[i, j]
                if c:
                    term = sympy.Rational(c.numerator, c.denominator)
                    for x, a in zip(xs, alpha):
                        term *= x ** a / sympy.factorial(a)
                    expr += term
        out.append(sympy.expand(expr))
    return out


def single(coeffs):
    """A map R -> R from ordinary polynomial coefficients ``c0 + c1 x + c2 x^2 + ...``."""
    from math import factorial
    blocks = {k: SymMatrix(1, 1, 1, k, [Fraction(c) * factorial(k)]) for k, c in enumerate(coeffs) if c}
    return PolyMap(1, 1, blocks)


def test_square_at_three():
    sq = single([0, 0, 1])
    assert sq([3]) == [9]
    assert sq.block(2).data == [2]


def test_compose_square_after_shift():
    got = compose(single([0, 0, 1]), single([1, 1]))
    assert {k: b.data[0] for k, b in got.blocks.items()} == {0: 1, 1: 2, 2: 2}
    assert got == single([1, 2, 1])


def test_change_of_variables_shift():
    # phi(x) = x^2 written in x' = x - 1, so x = x' + 1 and phi = (x' + 1)^2
    phi = single([0, 0, 1])
    s = PolyMap.identity(1)
    t_inv = single([1, 1])
    assert change_of_variables(phi, s, t_inv) == single([1, 2, 1])


def test_eval_matches_monomial_formula():
    rng = random.Random(9)
    for _ in range(30):
        phi = rg.polymap(rng, rng.randint(1, 3), rng.randint(1, 3), rng.randint(0, 3))
        x = rg.vector(rng, phi.n_in)
        assert eval_map(phi, x) == poly_eval_monomial(phi, x)


def test_compose_against_sympy_substitution():
    rng = random.Random(10)
    for _ in range(12):
        n_in, mid, n_out = rng.randint(1, 2), rng.randint(1, 2), rng.randint(1, 2)
        psi = rg.polymap(rng, n_in, mid, rng.randint(0, 2), density=0.6)
        phi = rg.polymap(rng, mid, n_out, rng.randint(0, 3), density=0.6)
        xs = sympy.symbols(f"x0:{n_in}")
        ys = sympy.symbols(f"y0:{mid}")
        inner = to_sympy(psi, xs)
        expected = [sympy.expand(e.subs(dict(zip(ys, inner)), simultaneous=True)) for e in to_sympy(phi, ys)]
        got = to_sympy(compose(phi, psi), xs)
        assert [sympy.expand(a - b) for a, b in zip(got, expected)] == [0] * n_out


def test_change_of_variables_against_sympy():
    rng = random.Random(12)
    for _ in range(8):
        n_in, n_out = rng.randint(1, 2), rng.randint(1, 2)
        phi = rg.polymap(rng, n_in, n_out, rng.randint(1, 2))
        s = rg.polymap(rng, n_out, n_out, rng.randint(1, 2))
        t_inv = rg.polymap(rng, n_in, n_in, rng.randint(1, 2))
        xs = sympy.symbols(f"x0:{n_in}")
        ys = sympy.symbols(f"y0:{n_out}")
        inner = to_sympy(t_inv, xs)
        mid = [e.subs(dict(zip(xs, inner)), simultaneous=True) for e in to_sympy(phi, xs)]
        expected = [sympy.expand(e.subs(dict(zip(ys, mid)), simultaneous=True)) for e in to_sympy(s, ys)]
        got = to_sympy(change_of_variables(phi, s, t_inv), xs)
        assert [sympy.expand(a - b) for a, b in zip(got, expected)] == [0] * n_out


def test_identity_is_neutral():
    rng = random.Random(13)
    for _ in range(10):
        phi = rg.polymap(rng, 2, 3, rng.randint(0, 3))
        assert compose(phi, PolyMap.identity(2)) == phi
        assert compose(PolyMap.identity(3), phi) == phi


def test_weight_cap():
    phi = single([0, 0, 0, 1])
    with pytest.raises(WeightLimitError):
        compose(phi, phi, max_weight=6)
    assert compose(phi, phi, max_weight=9) == single([0] * 9 + [1])


def test_dimension_checks():
    with pytest.raises(DimensionError):
        compose(PolyMap.identity(2), PolyMap.identity(3))
    with pytest.raises(DimensionError):
        PolyMap(2, 2, {1: SymMatrix(2, 2, 1, 2)})
    with pytest.raises(DimensionError):
        eval_map(PolyMap.identity(2), [1])
    with pytest.raises(DimensionError):
        change_of_variables(PolyMap.identity(2), PolyMap.identity(3), PolyMap.identity(2))


def test_exp_rejects_constant_block():
    m = BlockMatrix(1, 1, {(0, 0): SymMatrix.unit(1, 1)})
    with pytest.raises(ValueError):
        exp_block(m, 2, 2)


def test_exp_vector_blocks():
    ex = exp_vector([2, 3], 2)
    assert ex.get(0, 0).data == [1]
    assert ex.get(1, 0).data == [2, 3]
    # x^(2)/2! over x^2, xy, y^2 carries x^alpha times binomials: (4, 12, 9) / 2
    assert ex.get(2, 0).data == [2, 6, Fraction(9, 2)]


def test_zero_blocks_are_dropped():
    phi = PolyMap(1, 1, [SymMatrix(1, 1, 1, 1, [1]), SymMatrix(1, 1, 1, 1, [-1])])
    assert phi.blocks == {} and phi.degree == 0 and phi == PolyMap.zero(1, 1)


def test_invert_affine():
    rng = random.Random(14)
    for _ in range(10):
        n = rng.randint(1, 3)
        phi = PolyMap.linear(rg.invertible(rng, n), offset=rg.vector(rng, n))
        inv = invert_affine(phi)
        assert compose(phi, inv) == PolyMap.identity(n) == compose(inv, phi)
    with pytest.raises(ValueError):
        invert_affine(single([0, 0, 1]))


def test_homogeneous_action_identity():
    rng = random.Random(15)
    a = rg.sym(rng, 2, 3, 1, 2)
    assert gl_action_homogeneous(a, DenseMatrix.identity(2), DenseMatrix.identity(3)) == a
    with pytest.raises(DimensionError):
        gl_action_homogeneous(a, DenseMatrix.identity(3), DenseMatrix.identity(3))
