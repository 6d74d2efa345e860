import itertools
import random

import pytest

from multilin import randgen as rg
from multilin.antisym import (
    AltMatrix,
    compound,
    compound_by_minors,
    gl_action_antisym,
    minor,
    multi_wedge,
    wedge,
    wedge_power,
    wedge_vectors,
)
from multilin.errors import DimensionError, SingularMatrixError
from multilin.linalg import DenseMatrix, det, rank
from multilin.multiindex import strict_size
from multilin.oracles import leibniz_det, multi_wedge_direct


def test_diagonal_compound():
    c = compound(DenseMatrix.diag([2, 3, 5]), 2)
    assert c.tolist() == [[6, 0, 0], [0, 10, 0], [0, 0, 15]]
    assert det(c.as_dense()) == 900


def test_compound_of_2x2_is_det():
    m = DenseMatrix.from_rows([[1, 2], [3, 4]])
    assert compound(m, 2).tolist() == [[-2]]
    assert wedge_power(m, 2).tolist() == [[-4]]  # k! times the compound


def test_compound_zero_and_too_large():
    m = DenseMatrix.from_rows([[1, 2], [3, 4]])
    assert compound(m, 0) == AltMatrix.unit(2, 2)
    assert compound(m, 3).nrows == 0


def test_compound_equals_minors():
    rng = random.Random(1)
    for _ in range(40):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        m = rg.dense(rng, r, c)
        for k in range(0, min(r, c) + 1):
            assert compound(m, k) == compound_by_minors(m, k)


def test_minor_helper():
    m = DenseMatrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    assert minor(m, (1, 3), (2, 3)) == 2 * 10 - 3 * 8
    assert minor(m, (1, 2, 3), (1, 2, 3)) == leibniz_det(m)


def test_wedge_of_two_vectors():
    # 2x2 minors of [x y] in colex order (1,2), (1,3), (2,3)
    x, y = [1, 2, 3], [4, 5, 6]
    assert wedge_vectors([x, y]).data == [1 * 5 - 2 * 4, 1 * 6 - 3 * 4, 2 * 6 - 3 * 5]
    assert wedge_vectors([x, x]).is_zero()


def test_wedge_of_n_vectors_is_det():
    rng = random.Random(3)
    for n in range(1, 5):
        m = rg.dense(rng, n, n)
        cols = [[m[i, j] for i in range(n)] for j in range(n)]
        assert wedge_vectors(cols).data == [det(m)]


def test_wedge_matches_direct_formula():
    rng = random.Random(4)
    for _ in range(40):
        n, n2 = rng.randint(1, 4), rng.randint(1, 4)
        fs = [rg.alt(rng, n, n2, rng.randint(0, 2), rng.randint(0, 2)) for _ in range(rng.randint(1, 3))]
        assert multi_wedge(fs) == multi_wedge_direct(fs)


def test_graded_anticommutativity():
    rng = random.Random(5)
    for _ in range(40):
        n, n2 = rng.randint(1, 4), rng.randint(1, 4)
        p, pp, q, qq = (rng.randint(0, 2) for _ in range(4))
        a, b = rg.alt(rng, n, n2, p, pp), rg.alt(rng, n, n2, q, qq)
        assert wedge(a, b) == wedge(b, a) * (-1) ** (p * q + pp * qq)


def test_compound_rank():
    rng = random.Random(6)
    for _ in range(20):
        n = rng.randint(1, 4)
        r = rng.randint(0, n)
        a = rg.of_rank(rng, n, n, r)
        for k in range(1, n + 1):
            assert rank(compound(a, k).as_dense()) == strict_size(r, k)


def test_gl_action_identity_and_composition():
    rng = random.Random(7)
    a = rg.alt(rng, 3, 3, 1, 2)
    assert gl_action_antisym(a, DenseMatrix.identity(3)) == a
    s, t = rg.invertible(rng, 3), rg.invertible(rng, 3)
    assert gl_action_antisym(gl_action_antisym(a, s), t) == gl_action_antisym(a, s @ t)
    with pytest.raises(SingularMatrixError):
        gl_action_antisym(a, DenseMatrix.zeros(3, 3))


def test_shape_checks():
    with pytest.raises(DimensionError):
        wedge(AltMatrix.column([1, 2]), AltMatrix.column([1, 2, 3]))
    with pytest.raises(ValueError):
        wedge_vectors([])
    with pytest.raises(ValueError):
        wedge_power(DenseMatrix.identity(2), -1)


def test_wedge_of_basis_vectors_is_a_basis_vector():
    e = [[1 if i == j else 0 for i in range(4)] for j in range(4)]
    for idx in itertools.combinations(range(4), 2):
        w = wedge_vectors([e[idx[0]], e[idx[1]]])
        assert w[(idx[0] + 1, idx[1] + 1), ()] == 1 and sum(w.data) == 1
