"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

The backend is fixed at import time, so each backend runs in its own
subprocess (``MULTILIN_PURE_PYTHON=1`` selects the fallback).  Rational
inputs are scaled to integers first; once those exceed int64 the compiled
kernels fall back to Python objects, which is why the large determinant
shows little difference.
"""
import argparse
import json
import os
import random
import subprocess
import sys
import timeit


def cases():
    from multilin import randgen as rg
    from multilin.antisym import compound, wedge
    from multilin.linalg import DenseMatrix, det
    from multilin.polymap import compose
    from multilin.symalg import odot

    rng = random.Random(0)
    a, b = rg.sym(rng, 3, 3, 2, 2), rg.sym(rng, 3, 3, 2, 3)
    x, y = rg.alt(rng, 6, 6, 2, 2), rg.alt(rng, 6, 6, 2, 3)
    m = rg.dense(rng, 7, 7)
    big = rg.dense(rng, 24, 24)
    small = DenseMatrix(12, 12, [rng.randint(-5, 5) for _ in range(144)])
    phi, psi = rg.polymap(rng, 2, 2, 3), rg.polymap(rng, 2, 2, 2)
    return {
        "odot M3(2,2) x M3(2,3)": lambda: odot(a, b),
        "wedge M6(2,2) x M6(2,3)": lambda: wedge(x, y),
        "compound 7x7, k=3": lambda: compound(m, 3),
        "det 12x12, small ints": lambda: det(small),
        "det 24x24, rationals": lambda: det(big),
        "compose deg 3 o deg 2, n=2": lambda: compose(phi, psi),
    }


def run_here(repeat):
    from multilin.kernels import BACKEND
    out = {}
    for name, fn in cases().items():
        fn()
        number = 3
        out[name] = min(timeit.repeat(fn, number=number, repeat=repeat)) / number
    return BACKEND, out


def run_backend(pure, repeat):
    env = dict(os.environ)
    env["MULTILIN_PURE_PYTHON"] = "1" if pure else "0"
    proc = subprocess.run([sys.executable, __file__, "--child", "--repeat", str(repeat)],
                          env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.child:
        backend, times = run_here(args.repeat)
        print(json.dumps({"backend": backend, "times": times}))
        return
    fast = run_backend(False, args.repeat)
    slow = run_backend(True, args.repeat)
    if fast["backend"] != "cython":
        print("compiled extension not available; both columns use the Python kernels")
    print(f"{'case':<30} {fast['backend']:>10} {slow['backend']:>10} {'speedup':>8}")
    for name, t_fast in fast["times"].items():
        t_slow = slow["times"][name]
        print(f"{name:<30} {t_fast * 1e3:>8.2f}ms {t_slow * 1e3:>8.2f}ms {t_slow / t_fast:>7.2f}x")


if __name__ == "__main__":
    main()
