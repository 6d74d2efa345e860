"""Brute-force reference computations.

These deliberately avoid the plan/kernel machinery: each one evaluates a
defining sum directly over dictionaries or permutations, so it can be used to
check the fast paths.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial

from multilin.linalg import DenseMatrix
from multilin.multiindex import multi_shuffles, permutation_sign, stratum, strict_stratum


def leibniz_det(m: DenseMatrix) -> Fraction:
    n = m.rows
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        term = Fraction(permutation_sign(perm))
        for i, j in enumerate(perm):
            term *= m[i, j]
            if not term:
                break
        total += term
    return total


def _binom(a, b):
    out = 1
    for x, y in zip(a, b):
        if y > x:
            return 0
        out *= factorial(x) // (factorial(y) * factorial(x - y))
    return out


def odot_brute(a, b):
    """Direct double sum over all ``beta``, ``beta'`` of the right weights."""
    from multilin.symalg import SymMatrix
    n, n_prime = a.n, a.n_prime
    a_rows, a_cols = stratum(n, a.p), stratum(n_prime, a.p_prime)
    b_rows, b_cols = stratum(n, b.p), stratum(n_prime, b.p_prime)
    av = {(r, c): a.data[i * a.ncols + j] for i, r in enumerate(a_rows) for j, c in enumerate(a_cols)}
    bv = {(r, c): b.data[i * b.ncols + j] for i, r in enumerate(b_rows) for j, c in enumerate(b_cols)}
    out = SymMatrix(n, n_prime, a.p + b.p, a.p_prime + b.p_prime)
    for i, alpha in enumerate(stratum(n, a.p + b.p)):
        for j, alpha_p in enumerate(stratum(n_prime, a.p_prime + b.p_prime)):
            total = Fraction(0)
            for beta in a_rows:
                rest = tuple(x - y for x, y in zip(alpha, beta))
                if min(rest, default=0) < 0:
                    continue
                for beta_p in a_cols:
                    rest_p = tuple(x - y for x, y in zip(alpha_p, beta_p))
                    if min(rest_p, default=0) < 0:
                        continue
                    total += _binom(alpha_p, beta_p) * av[beta, beta_p] * bv[rest, rest_p]
            out.data[i * out.ncols + j] = total
    return out


def multi_wedge_direct(factors):
    """Entry formula for ``A^1 wedge ... wedge A^k`` over multi-block shuffles."""
    from multilin.antisym import AltMatrix
    n, n_prime = factors[0].n, factors[0].n_prime
    ps = [f.p for f in factors]
    pps = [f.p_prime for f in factors]
    lookups = []
    for f in factors:
        rows, cols = strict_stratum(n, f.p), strict_stratum(n_prime, f.p_prime)
        lookups.append({(r, c): f.data[i * f.ncols + j] for i, r in enumerate(rows) for j, c in enumerate(cols)})
    row_shuffles = multi_shuffles(ps)
    col_shuffles = multi_shuffles(pps)
    out = AltMatrix(n, n_prime, sum(ps), sum(pps))
    for i, alpha in enumerate(strict_stratum(n, sum(ps))):
        for j, alpha_p in enumerate(strict_stratum(n_prime, sum(pps))):
            total = Fraction(0)
            for sigma, s in row_shuffles:
                picked = [alpha[t - 1] for t in sigma.images]
                for sigma_p, s_p in col_shuffles:
                    picked_p = [alpha_p[t - 1] for t in sigma_p.images]
                    term = Fraction(s * s_p)
                    start = start_p = 0
                    for lk, p, pp in zip(lookups, ps, pps):
                        term *= lk[tuple(picked[start:start + p]), tuple(picked_p[start_p:start_p + pp])]
                        if not term:
                            break
                        start += p
                        start_p += pp
                    total += term
            out.data[i * out.ncols + j] = total
    return out


def poly_eval_monomial(phi, x) -> list[Fraction]:
    """``phi_i(x) = sum_k sum_alpha M(1,k)[i, alpha] x^alpha / alpha!``."""
    out = [Fraction(0)] * phi.n_out
    for k, blk in phi.blocks.items():
        for j, alpha in enumerate(stratum(phi.n_in, k)):
            mono = Fraction(1)
            for xi, a in zip(x, alpha):
                mono *= Fraction(xi) ** a
                mono /= factorial(a)
            for i in range(phi.n_out):
                out[i] += blk.data[i * blk.ncols + j] * mono
    return out
