import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multilin import randgen as rg
from multilin.errors import DimensionError, SingularMatrixError
from multilin.linalg import (
    DenseMatrix,
    det,
    inverse,
    is_upper_triangular,
    matmul,
    rank,
    triangular_spectrum,
)
from multilin.oracles import leibniz_det

fracs = st.fractions(min_value=-9, max_value=9, max_denominator=5)


def square(n):
    return st.lists(fracs, min_size=n * n, max_size=n * n).map(lambda d: DenseMatrix(n, n, d))


@given(st.integers(1, 5).flatmap(square))
@settings(max_examples=60)
def test_det_matches_leibniz(m):
    assert det(m) == leibniz_det(m)


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(square(n), square(n))))
@settings(max_examples=60)
def test_det_multiplicative(ab):
    a, b = ab
    assert det(matmul(a, b)) == det(a) * det(b)


def test_rank_and_transpose():
    rng = random.Random(3)
    for _ in range(80):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        r = rng.randint(0, min(rows, cols))
        m = rg.of_rank(rng, rows, cols, r)
        assert rank(m) == rank(m.transpose()) == r


def test_inverse():
    rng = random.Random(4)
    for _ in range(50):
        n = rng.randint(1, 6)
        t = rg.invertible(rng, n)
        assert matmul(t, inverse(t)) == DenseMatrix.identity(n) == matmul(inverse(t), t)
    with pytest.raises(SingularMatrixError):
        inverse(DenseMatrix.from_rows([[1, 2], [2, 4]]))


def test_small_fixtures():
    m = DenseMatrix.from_rows([[1, 2], [3, 4]])
    assert det(m) == -2
    assert inverse(m) == DenseMatrix.from_rows([["-2", "1"], ["3/2", "-1/2"]])
    assert det(DenseMatrix.diag([2, 3, 5])) == 30
    assert det(DenseMatrix.zeros(0, 0)) == 1
    assert m @ DenseMatrix.identity(2) == m
    assert (m + m) == m * 2 and (m - m).is_zero()
    assert m[1, 0] == 3 and m.transpose()[0, 1] == 3


def test_dimension_errors():
    with pytest.raises(DimensionError):
        matmul(DenseMatrix.zeros(2, 3), DenseMatrix.zeros(2, 3))
    with pytest.raises(DimensionError):
        det(DenseMatrix.zeros(2, 3))
    with pytest.raises(DimensionError):
        DenseMatrix(2, 2, [1, 2, 3])


def test_triangular_spectrum():
    t = DenseMatrix.from_rows([[3, 1, 4], [0, -1, 5], [0, 0, Fraction(1, 2)]])
    assert is_upper_triangular(t)
    assert triangular_spectrum(t) == [-1, Fraction(1, 2), 3]
    with pytest.raises(ValueError):
        triangular_spectrum(t.transpose())


def test_large_entries_stay_exact():
    # entries far beyond int64 must not be truncated by a compiled kernel
    big = 10 ** 30
    m = DenseMatrix.from_rows([[big, 1], [1, big]])
    assert det(m) == big * big - 1
    assert matmul(m, m)[0, 0] == big * big + 1
