"""The compiled and pure-Python kernels must agree exactly, including past int64."""
import os
import random
import subprocess
import sys
from array import array

import pytest

from multilin import _kernels_py as py
from multilin import kernels

cy = pytest.importorskip("multilin._kernels")


def random_plan(rng, terms, out_n, a_n, b_n):
    rows = [(rng.randrange(out_n), rng.randrange(a_n), rng.randrange(b_n), rng.randint(1, 6)) for _ in range(terms)]
    return tuple(array("q", c) for c in zip(*rows)) if rows else tuple(array("q") for _ in range(4))


@pytest.mark.parametrize("scale", [1, 10 ** 6, 2 ** 40, 10 ** 25])
def test_contract_agrees(scale):
    rng = random.Random(scale)
    for _ in range(20):
        ar, ac, br, bc, orr, oc = (rng.randint(1, 5) for _ in range(6))
        rows = random_plan(rng, rng.randint(0, 12), orr, ar, br)
        cols = random_plan(rng, rng.randint(0, 12), oc, ac, bc)
        a = [rng.randint(-scale, scale) for _ in range(ar * ac)]
        b = [rng.randint(-scale, scale) for _ in range(br * bc)]
        assert list(cy.contract(rows, cols, a, ac, b, bc, orr, oc)) == py.contract(rows, cols, a, ac, b, bc, orr, oc)


@pytest.mark.parametrize("scale", [1, 2 ** 31, 2 ** 40, 10 ** 30])
def test_matmul_and_det_agree(scale):
    rng = random.Random(scale + 1)
    for _ in range(20):
        n, m, k = rng.randint(1, 5), rng.randint(1, 5), rng.randint(1, 5)
        a = [rng.randint(-scale, scale) for _ in range(n * m)]
        b = [rng.randint(-scale, scale) for _ in range(m * k)]
        assert list(cy.matmul(a, b, n, m, k)) == py.matmul(a, b, n, m, k)
        sq = [rng.randint(-scale, scale) for _ in range(n * n)]
        assert cy.bareiss_det(sq, n) == py.bareiss_det(sq, n)


def test_det_with_pivoting():
    vals = [0, 1, 0, 1, 0, 0, 0, 0, 1]
    assert cy.bareiss_det(vals, 3) == py.bareiss_det(vals, 3) == -1
    assert cy.bareiss_det([], 0) == 1


def test_default_backend_is_compiled():
    if os.environ.get("MULTILIN_PURE_PYTHON", "") not in ("", "0"):
        pytest.skip("pure-Python backend forced")
    assert kernels.BACKEND == "cython"


def test_env_forces_pure_python():
    env = dict(os.environ, MULTILIN_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import multilin.kernels as k; print(k.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_whole_pipeline_identical_across_backends():
    # same verify transcript whichever backend runs it
    cmd = [sys.executable, "-m", "multilin", "verify", "--seed", "5", "--rounds", "3"]
    fast = subprocess.run(cmd, capture_output=True, check=True).stdout
    slow = subprocess.run(cmd, env=dict(os.environ, MULTILIN_PURE_PYTHON="1"),
                          capture_output=True, check=True).stdout
    assert fast == slow
