import math
import random

import pytest

from multilin import randgen as rg
from multilin.antisym import AltMatrix, wedge
from multilin.norms import NormParams, holder_norm


def test_zero_has_zero_norm():
    assert holder_norm(AltMatrix.zeros(3, 3, 1, 2)) == 0.0


def test_all_ones_2x2():
    a = AltMatrix(2, 2, 1, 1, [1, 1, 1, 1])
    assert holder_norm(a, 2) == pytest.approx(2.0, rel=1e-12)
    assert holder_norm(a, 1) == 4.0


def test_weights_enter_the_scale():
    # single entry 1 in a (2, 1) stratum: (1 / (2! 1!)^(rho - 1))^(1/rho)
    a = AltMatrix(3, 3, 2, 1, [1] + [0] * 8)
    assert holder_norm(a, 2) == pytest.approx(math.sqrt(0.5))
    assert holder_norm(a, 3) == pytest.approx((1 / 4) ** (1 / 3))


def test_rho_below_one_rejected():
    with pytest.raises(ValueError):
        NormParams(0.5)
    with pytest.raises(ValueError):
        holder_norm(AltMatrix.unit(1, 1), 0.9)
    assert NormParams(1.0).conjugate == math.inf
    assert NormParams(2.0).conjugate == 2.0


def test_homogeneous_and_submultiplicative():
    rng = random.Random(0)
    for _ in range(50):
        n, n2 = rng.randint(1, 4), rng.randint(1, 4)
        a = rg.alt(rng, n, n2, rng.randint(0, 2), rng.randint(0, 2))
        b = rg.alt(rng, n, n2, rng.randint(0, 2), rng.randint(0, 2))
        for rho in (1.0, 1.5, 2.0, 3.0):
            assert holder_norm(a * 3, rho) == pytest.approx(3 * holder_norm(a, rho))
            assert holder_norm(wedge(a, b), rho) <= holder_norm(a, rho) * holder_norm(b, rho) * (1 + 1e-9)
