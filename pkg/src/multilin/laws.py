"""Catalogue of checkable identities.

Every law takes a ``random.Random`` and draws its own small instance, then
compares two independent routes to the same value.  A violated law raises
:class:`LawViolation` carrying enough context to replay it.  Exhaustive laws
ignore the generator.

``SUITES`` groups the laws the way ``multilin verify`` reports them.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction

from multilin import randgen as rg
from multilin.antisym import (
    AltMatrix,
    compound,
    compound_by_minors,
    multi_wedge,
    wedge,
    wedge_power,
    wedge_vectors,
)
from multilin.exactnum import to_float
from multilin.linalg import DenseMatrix, det, inverse, is_upper_triangular, matmul, rank, triangular_spectrum
from multilin.multiindex import (
    Permutation,
    compare_graded,
    fixing_shuffles,
    is_shuffle,
    multi_binomial,
    multi_shuffles,
    rank_index,
    shuffle_decompose,
    shuffle_decompose_tail,
    stratum,
    stratum_size,
    strict_stratum,
    sub_indices,
    unrank_index,
)
from multilin.multilinear import (
    AltMultiMap,
    BilinearMap,
    SymMultiMap,
    alternating_pairing,
    eval_alt,
    eval_sym,
    oracle_eval_from_tensor,
    product_alt,
    product_alt_by_definition,
    product_alt_same_space,
    product_sym,
    product_sym_by_definition,
    product_sym_same_space,
    symmetric_pairing,
    tensor_build,
)
from multilin.norms import holder_norm
from multilin.oracles import leibniz_det, multi_wedge_direct, odot_brute, poly_eval_monomial
from multilin.polymap import (
    PolyMap,
    change_of_variables,
    compose,
    eval_map,
    exp_block,
    exp_vector,
    gl_action_homogeneous,
)
from multilin.symalg import SymMatrix, odot, odot_all, odot_power, sym_power

NORM_RHOS = (1.0, 1.5, 2.0, 3.0)
NORM_SLACK = 1e-9


class LawViolation(AssertionError):
    pass


def expect(cond, what: str, **context):
    if not cond:
        detail = ", ".join(f"{k}={v!r}" for k, v in context.items())
        raise LawViolation(f"{what}" + (f" ({detail})" if detail else ""))


def _col(values) -> SymMatrix:
    return SymMatrix.column(values)


def _random_multi_index(rng, n, max_weight):
    p = rng.randint(0, max_weight)
    return unrank_index(n, p, rng.randrange(stratum_size(n, p))) if n else ()


# --- multi-indices and shuffles ------------------------------------------

def graded_order_translation(rng):
    n = rng.randint(1, 4)
    a, b, c = (_random_multi_index(rng, n, 4) for _ in range(3))
    ac = tuple(x + z for x, z in zip(a, c))
    bc = tuple(y + z for y, z in zip(b, c))
    expect(compare_graded(a, b) == compare_graded(ac, bc), "order not translation invariant", a=a, b=b, c=c)
    expect(compare_graded(a, b) == -compare_graded(b, a), "order not antisymmetric", a=a, b=b)


def rank_roundtrip(rng):
    n = rng.randint(1, 4)
    p = rng.randint(0, 5)
    pos = rng.randrange(stratum_size(n, p))
    alpha = unrank_index(n, p, pos)
    expect(rank_index(alpha) == pos, "rank(unrank(i)) != i", n=n, p=p, pos=pos)
    expect(stratum(n, p)[pos] == alpha, "unrank disagrees with enumeration", n=n, p=p, pos=pos)


def binomial_vandermonde(rng):
    n = rng.randint(1, 4)
    a = _random_multi_index(rng, n, 6)
    p = rng.randint(0, sum(a))
    total = sum(multi_binomial(a, b) for b in sub_indices(a, p))
    expect(total == math.comb(sum(a), p), "sum of multi-binomials != binomial", a=a, p=p)


def _check_shuffle_bijection(p, q, r, head: bool):
    target = {s.images for s, _ in multi_shuffles((p, q, r))}
    if head:
        left = [s for s, _ in multi_shuffles((p, q + r))]
        right = fixing_shuffles(p, q, r, "head")
        decompose = shuffle_decompose
    else:
        left = [s for s, _ in multi_shuffles((p + q, r))]
        right = fixing_shuffles(p, q, r, "tail")
        decompose = shuffle_decompose_tail
    images = set()
    for sigma in left:
        for tau in right:
            prod = sigma * tau
            expect(is_shuffle(prod, (p, q, r)), "product leaves the shuffle set", sizes=(p, q, r))
            expect(prod.sign == sigma.sign * tau.sign, "sign not multiplicative", sizes=(p, q, r))
            images.add(prod.images)
    expect(len(images) == len(left) * len(right), "product map not injective", sizes=(p, q, r), head=head)
    expect(images == target, "product map not surjective", sizes=(p, q, r), head=head)
    fixed = {t.images for t in right}
    for images_s0 in target:
        s0 = Permutation(images_s0)
        sigma, tau = decompose(s0, p, q, r)
        expect(sigma * tau == s0 and tau.images in fixed, "decomposition does not invert the product",
               s0=images_s0)


def shuffle_bijections_exhaustive(rng=None):
    for p, q, r in itertools.product(range(4), repeat=3):
        _check_shuffle_bijection(p, q, r, head=True)
        _check_shuffle_bijection(p, q, r, head=False)


# --- exact scalars and dense linear algebra ------------------------------

def field_axioms(rng):
    a, b, c = (rg.rational(rng, 20, 9) for _ in range(3))
    expect((a + b) + c == a + (b + c) and (a * b) * c == a * (b * c), "associativity")
    expect(a * (b + c) == a * b + a * c, "distributivity")
    if a:
        expect(a * (1 / a) == 1, "multiplicative inverse", a=a)
    expect(a + (-a) == 0, "additive inverse")


def det_multiplicative(rng):
    n = rng.randint(1, 6)
    a, b = rg.dense(rng, n, n), rg.dense(rng, n, n)
    expect(det(matmul(a, b)) == det(a) * det(b), "det(AB) != det(A)det(B)", n=n)
    if n <= 5:
        expect(det(a) == leibniz_det(a), "Bareiss and Leibniz determinants differ", n=n)


def rank_transpose_inverse(rng):
    rows, cols = rng.randint(1, 6), rng.randint(1, 6)
    r = rng.randint(0, min(rows, cols))
    m = rg.of_rank(rng, rows, cols, r)
    expect(rank(m) == rank(m.transpose()) == r, "rank mismatch", r=r)
    n = rng.randint(1, 6)
    t = rg.invertible(rng, n)
    expect(matmul(t, inverse(t)) == DenseMatrix.identity(n), "A inverse(A) != I", n=n)


# --- the symmetric product -----------------------------------------------

def _sym_triple(rng, same_shape=False):
    n, n_prime = rng.randint(1, 3), rng.randint(1, 3)
    shapes = [(rng.randint(0, 2), rng.randint(0, 2)) for _ in range(3)]
    if same_shape:
        shapes[1] = shapes[0]
    return [rg.sym(rng, n, n_prime, p, pp) for p, pp in shapes]


def odot_matches_definition(rng):
    a, b, _ = _sym_triple(rng)
    expect(odot(a, b) == odot_brute(a, b), "kernel odot differs from the defining sum",
           sig=(a.signature, b.signature))


def odot_commutative(rng):
    a, b, _ = _sym_triple(rng)
    expect(odot(a, b) == odot(b, a), "A odot B != B odot A")


def odot_bilinear(rng):
    a, b, c = _sym_triple(rng, same_shape=True)
    lam = rg.rational(rng)
    expect(odot(a + b, c) == odot(a, c) + odot(b, c), "odot not additive")
    expect(odot(a * lam, c) == odot(a, c) * lam, "scalar does not pull out")


def odot_associative(rng):
    a, b, c = _sym_triple(rng)
    expect(odot(odot(a, b), c) == odot(a, odot(b, c)), "odot not associative")


def odot_triangular_closure(rng):
    n = rng.randint(1, 3)
    p, q = rng.randint(0, 2), rng.randint(0, 2)
    mats = []
    for w in (p, q):
        m = rg.sym(rng, n, n, w, w)
        for i in range(m.nrows):
            for j in range(i):
                m.data[i * m.ncols + j] = Fraction(0)
        mats.append(m)
    expect(is_upper_triangular(odot(*mats).as_dense()), "odot of triangular matrices not triangular")


def odot_no_zero_divisors(rng):
    a, b, _ = _sym_triple(rng)
    for m in (a, b):
        # sparse but nonzero, so cancellation would be the only way to hit zero
        keep = rng.randrange(len(m.data))
        m.data = [x if i == keep or rng.random() < 0.3 else Fraction(0) for i, x in enumerate(m.data)]
        if not m.data[keep]:
            m.data[keep] = rg.nonzero_rational(rng)
    expect(not odot(a, b).is_zero(), "nonzero factors with zero product")


def odot_mixed_identities(rng):
    n, n1, n2 = rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 3)
    p, p1, p2, q = (rng.randint(0, 2) for _ in range(4))
    a = rg.sym(rng, n, n1, p, p1)
    b = rg.sym(rng, n1, n2, p1, p2)
    v = rg.sym(rng, n, n1, q, 0)
    expect(odot(a, v) @ b == odot(a @ b, v.rebase(n_prime=n2)), "(A odot V)B != (AB) odot V")
    h = rg.sym(rng, n1, n2, 0, q)
    expect(a @ odot(b, h) == odot(a @ b, h.rebase(n=n)), "A(B odot H) != (AB) odot H")


def vector_powers(rng):
    n = rng.randint(1, 3)
    m = rng.randint(0, 4)
    v = rg.vector(rng, n)
    vm = odot_power(_col(v), m)
    for alpha in stratum(n, m):
        mono = math.prod((x ** a for x, a in zip(v, alpha)), start=Fraction(1))
        expect(vm[alpha, ()] == math.factorial(m) // math.prod(math.factorial(a) for a in alpha) * mono,
               "(v^(m))_alpha != binom(m, alpha) v^alpha", v=v, alpha=alpha)
    h = rg.vector(rng, n)
    hm = odot_power(SymMatrix.row_vector(h), m)
    for alpha in stratum(n, m):
        mono = math.prod((x ** a for x, a in zip(h, alpha)), start=Fraction(1))
        expect(hm[(), alpha] == math.factorial(m) * mono, "(h^(m))_alpha != m! h^alpha", h=h, alpha=alpha)


def scaled_power_factorization(rng):
    n, n_prime = rng.randint(1, 3), rng.randint(1, 3)
    p, q, pp, qq = (rng.randint(0, 2) for _ in range(4))
    a = rg.sym(rng, n, n_prime, p, pp)
    b = rg.sym(rng, n, n_prime, q, qq)
    h = SymMatrix.row_vector(rg.vector(rng, n))
    hp = {k: sym_power(h, k) for k in {p, q, p + q}}
    left = odot(hp[p] @ a, hp[q] @ b)
    expect(left == hp[p + q] @ odot(a, b), "row-vector power factorization", p=p, q=q)
    v = SymMatrix.column(rg.vector(rng, n_prime))
    vp = {k: sym_power(v, k) for k in {pp, qq, pp + qq}}
    left = odot(a @ vp[pp], b @ vp[qq])
    expect(left == odot(a, b) @ vp[pp + qq], "column-vector power factorization", pp=pp, qq=qq)


def common_eigenvector(rng):
    n = rng.randint(1, 3)
    k = rng.randint(1, 3)
    p = rg.invertible(rng, n)
    p_inv = inverse(p)
    v = [p[i, 0] for i in range(n)]
    lams, mats = [], []
    for _ in range(k):
        diag = [rg.rational(rng) for _ in range(n)]
        lams.append(diag[0])
        mats.append(SymMatrix.from_matrix(matmul(matmul(p, DenseMatrix.diag(diag)), p_inv)))
    vk = odot_power(_col(v), k)
    lhs = odot_all(mats) @ vk
    scale = math.factorial(k) * math.prod(lams, start=Fraction(1))
    expect(lhs == vk * scale, "common eigenvector of the odot product", k=k)


def pointwise_power_law(rng):
    n, n_prime = rng.randint(1, 3), rng.randint(1, 3)
    m = rng.randint(1, 3)
    a = rg.dense(rng, n, n_prime)
    vs = [rg.vector(rng, n_prime) for _ in range(m)]
    am = SymMatrix.from_matrix(a)
    lhs = odot_all([am @ _col(v).rebase(n=n_prime) for v in vs])
    rhs = sym_power(a, m) @ odot_all([_col(v) for v in vs])
    expect(lhs == rhs.rebase(n_prime=n_prime), "A v1 odot ... odot A vm != A^(m) (v1 odot ... odot vm)/m!", m=m)


def sym_power_functorial(rng):
    n = rng.randint(1, 3)
    k = rng.randint(0, 3)
    a, b = rg.dense(rng, n, n), rg.dense(rng, n, n)
    expect(sym_power(matmul(a, b), k) == sym_power(a, k) @ sym_power(b, k), "sym_power not multiplicative", k=k)
    t = rg.invertible(rng, n)
    prod = sym_power(t, k) @ sym_power(inverse(t), k)
    expect(prod.as_dense() == DenseMatrix.identity(prod.nrows), "sym_power(T^-1) is not the inverse", k=k)


def sym_power_spectrum(rng):
    n, k = rng.randint(1, 4), rng.randint(1, 3)
    a = rg.upper_triangular(rng, n)
    lam = [a[i, i] for i in range(n)]
    want = sorted(math.prod((lam[i] ** e for i, e in enumerate(alpha)), start=Fraction(1))
                  for alpha in stratum(n, k))
    power = sym_power(a, k).as_dense()
    expect(is_upper_triangular(power), "power of a triangular matrix not triangular", n=n, k=k)
    expect(triangular_spectrum(power) == want, "spectrum of the symmetric power", n=n, k=k)


def sym_power_rank(rng):
    n, k = rng.randint(1, 4), rng.randint(1, 3)
    rows = rng.randint(1, 4)
    l = rng.randint(1, min(n, rows))
    a = rg.of_rank(rng, rows, n, l)
    expect(rank(sym_power(a, k).as_dense()) == math.comb(k + l - 1, l - 1), "rank law", n=n, k=k, l=l)


def sym_power_det(rng):
    n, k = rng.randint(1, 4), rng.randint(1, 3)
    a = rg.dense(rng, n, n)
    expect(det(sym_power(a, k).as_dense()) == det(a) ** math.comb(k + n - 1, n), "det law", n=n, k=k)


# --- polynomial maps ------------------------------------------------------

def _small_map(rng, n_in, n_out, max_degree=3):
    return rg.polymap(rng, n_in, n_out, rng.randint(0, max_degree), density=0.7, bound=3, max_den=2)


def eval_matches_monomials(rng):
    n_in, n_out = rng.randint(0, 3), rng.randint(1, 3)
    phi = _small_map(rng, n_in, n_out)
    x = rg.vector(rng, n_in)
    expect(eval_map(phi, x) == poly_eval_monomial(phi, x), "M_phi Exp(x) != monomial evaluation")


def compose_pointwise(rng):
    a, b, c = (rng.randint(1, 3) for _ in range(3))
    phi, psi = _small_map(rng, b, c), _small_map(rng, a, b)
    y = rg.vector(rng, a)
    expect(eval_map(compose(phi, psi), y) == poly_eval_monomial(phi, poly_eval_monomial(psi, y)),
           "compose(phi, psi)(y) != phi(psi(y))", deg=(phi.degree, psi.degree))


def exp_of_image(rng):
    n_in, n_out = rng.randint(1, 3), rng.randint(1, 3)
    phi = _small_map(rng, n_in, n_out, 2)
    x = rg.vector(rng, n_in)
    top = rng.randint(1, 3)
    cols = top * phi.degree
    lhs = exp_vector(eval_map(phi, x), top)
    rhs = exp_block(phi.matrix(), top, cols) @ exp_vector(x, cols)
    for k in range(top + 1):
        expect(lhs.get(k, 0) == rhs.get(k, 0).rebase(n_prime=n_out), "Exp(phi(x)) != Exp(M_phi) Exp(x)", k=k)


def exp_of_composition(rng):
    a, b, c = (rng.randint(1, 2) for _ in range(3))
    phi, psi = _small_map(rng, b, c, 2), _small_map(rng, a, b, 2)
    top = rng.randint(1, 2)
    mid = top * phi.degree
    cols = mid * psi.degree
    lhs = exp_block(compose(phi, psi).matrix(), top, cols)
    rhs = exp_block(phi.matrix(), top, mid) @ exp_block(psi.matrix(), mid, cols)
    for p in range(top + 1):
        for pp in range(cols + 1):
            expect(lhs.get(p, pp) == rhs.get(p, pp), "Exp(M_phi Exp(M_psi)) != Exp(M_phi) Exp(M_psi)",
                   block=(p, pp))


def compose_associative(rng):
    dims = [rng.randint(1, 2) for _ in range(4)]
    phi, psi, chi = (_small_map(rng, dims[i + 1], dims[i], 2) for i in range(3))
    expect(compose(compose(phi, psi), chi) == compose(phi, compose(psi, chi)), "composition not associative")


def change_of_variables_law(rng):
    n_in, n_out = rng.randint(1, 2), rng.randint(1, 2)
    phi = _small_map(rng, n_in, n_out, 2)
    s = _small_map(rng, n_out, n_out, 2)
    t_inv = _small_map(rng, n_in, n_in, 2)
    got = change_of_variables(phi, s, t_inv)
    expect(got == compose(s, compose(phi, t_inv)), "S Exp(M_phi) Exp(T_inv) != matrix of S o phi o T_inv")
    y = rg.vector(rng, n_in)
    expect(eval_map(got, y) == poly_eval_monomial(s, poly_eval_monomial(phi, poly_eval_monomial(t_inv, y))),
           "change of variables pointwise")


def gl_rank_invariance(rng):
    n_out, n_in, k = rng.randint(1, 3), rng.randint(1, 3), rng.randint(0, 3)
    l = rng.randint(0, min(n_out, stratum_size(n_in, k)))
    a = SymMatrix(n_out, n_in, 1, k, rg.of_rank(rng, n_out, stratum_size(n_in, k), l).data)
    s, t = rg.invertible(rng, n_out), rg.invertible(rng, n_in)
    moved = gl_action_homogeneous(a, s, inverse(t))
    expect(rank(moved.as_dense()) == rank(a.as_dense()) == l, "rank of A(1,k) not invariant", l=l)
    s2, t2 = rg.invertible(rng, n_out), rg.invertible(rng, n_in)
    twice = gl_action_homogeneous(moved, s2, inverse(t2))
    once = gl_action_homogeneous(a, matmul(s2, s), matmul(inverse(t), inverse(t2)))
    expect(twice == once, "GL action is not a group action")


# --- the alternating product ---------------------------------------------

def _alt_pair(rng, max_weight=2, max_dim=4):
    n, n_prime = rng.randint(1, max_dim), rng.randint(1, max_dim)
    p, pp, q, qq = (rng.randint(0, max_weight) for _ in range(4))
    return rg.alt(rng, n, n_prime, p, pp), rg.alt(rng, n, n_prime, q, qq)


def wedge_matches_definition(rng):
    a, b = _alt_pair(rng)
    expect(wedge(a, b) == multi_wedge_direct([a, b]), "kernel wedge differs from the shuffle sum")


def wedge_anticommutative(rng):
    a, b = _alt_pair(rng)
    sign = (-1) ** (a.p * b.p + a.p_prime * b.p_prime)
    expect(wedge(a, b) == wedge(b, a) * sign, "graded anticommutativity", sig=(a.signature, b.signature))


def wedge_bilinear(rng):
    a, c = _alt_pair(rng)
    b = rg.alt(rng, *a.signature)
    lam = rg.rational(rng)
    expect(wedge(a + b, c) == wedge(a, c) + wedge(b, c), "wedge not additive")
    expect(wedge(a * lam, c) == wedge(a, c) * lam, "scalar does not pull out")


def wedge_associative(rng):
    a, b = _alt_pair(rng, max_weight=2, max_dim=4)
    c = rg.alt(rng, a.n, a.n_prime, rng.randint(0, 1), rng.randint(0, 1))
    expect(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)), "wedge not associative")


def wedge_triangular_closure(rng):
    n = rng.randint(1, 4)
    mats = []
    for w in (rng.randint(0, 2), rng.randint(0, 2)):
        m = rg.alt(rng, n, n, w, w)
        for i in range(m.nrows):
            for j in range(i):
                m.data[i * m.ncols + j] = Fraction(0)
        mats.append(m)
    expect(is_upper_triangular(wedge(*mats).as_dense()), "wedge of triangular matrices not triangular")


def multi_wedge_fold(rng):
    n, n_prime = rng.randint(1, 4), rng.randint(1, 4)
    k = rng.randint(1, 3)
    factors = [rg.alt(rng, n, n_prime, rng.randint(0, 2), rng.randint(0, 2)) for _ in range(k)]
    expect(multi_wedge(factors) == multi_wedge_direct(factors), "folded wedge != multi-shuffle formula", k=k)


def vector_wedges(rng):
    n = rng.randint(1, 4)
    x, y = rg.vector(rng, n), rg.vector(rng, n)
    expect(wedge_vectors([x, x]).is_zero(), "x wedge x != 0")
    expect(wedge_vectors([x, y]) == -wedge_vectors([y, x]), "x wedge y != -(y wedge x)")


def wedge_of_vectors_is_det(rng):
    m = rng.randint(1, 4)
    xs = [rg.vector(rng, m) for _ in range(m)]
    full = DenseMatrix(m, m, [xs[j][i] for i in range(m) for j in range(m)])
    expect(wedge_vectors(xs).data == [det(full)], "top wedge of vectors != determinant", m=m)


def compound_minors(rng):
    n, m = rng.randint(1, 4), rng.randint(1, 4)
    k = rng.randint(0, min(n, m))
    a = rg.dense(rng, n, m)
    expect(compound(a, k) == compound_by_minors(a, k), "compound != minors", k=k)


def compound_permutation_sums(rng):
    n, m = rng.randint(1, 4), rng.randint(1, 4)
    k = rng.randint(1, min(n, m, 3))
    a = rg.dense(rng, n, m)
    power = wedge_power(a, k)
    perms = [(perm, math.prod(-1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j]))
             for perm in itertools.permutations(range(k))]
    for rows in strict_stratum(n, k):
        for cols in strict_stratum(m, k):
            by_cols = sum((s * math.prod((a[rows[i] - 1, cols[perm[i]] - 1] for i in range(k)), start=Fraction(1))
                           for perm, s in perms), Fraction(0))
            by_rows = sum((s * math.prod((a[rows[perm[i]] - 1, cols[i] - 1] for i in range(k)), start=Fraction(1))
                           for perm, s in perms), Fraction(0))
            entry = power[rows, cols]
            expect(entry == math.factorial(k) * by_cols == math.factorial(k) * by_rows,
                   "wedge power entry != k! signed permutation sum", rows=rows, cols=cols)


def compound_multiplicative(rng):
    n, m, l = (rng.randint(1, 4) for _ in range(3))
    k = rng.randint(0, 3)
    a, b = rg.dense(rng, n, m), rg.dense(rng, m, l)
    expect(compound(matmul(a, b), k) == compound(a, k) @ compound(b, k), "compound not multiplicative", k=k)
    if k:
        xs = [rg.vector(rng, m) for _ in range(k)]
        ax = [[sum((a[i, j] * x[j] for j in range(m)), Fraction(0)) for i in range(n)] for x in xs]
        expect(wedge_vectors(ax).data == (compound(a, k) @ wedge_vectors(xs)).data,
               "A x1 wedge ... wedge A xk != compound(A, k)(x1 wedge ... wedge xk)", k=k)


def compound_eigenvectors(rng):
    n = rng.randint(1, 4)
    k = rng.randint(1, n)
    p = rg.invertible(rng, n)
    diag = [rg.rational(rng) for _ in range(n)]
    a = matmul(matmul(p, DenseMatrix.diag(diag)), inverse(p))
    idx = sorted(rng.sample(range(n), k))
    xs = [[p[i, j] for i in range(n)] for j in idx]
    w = wedge_vectors(xs)
    lam = math.prod((diag[j] for j in idx), start=Fraction(1))
    expect((compound(a, k) @ w).data == [lam * x for x in w.data], "eigenvector law for compounds", k=k)


def compound_spectrum(rng):
    n = rng.randint(1, 4)
    k = rng.randint(0, n)
    a = rg.upper_triangular(rng, n)
    c = compound(a, k).as_dense()
    want = sorted(math.prod((a[i - 1, i - 1] for i in rows), start=Fraction(1)) for rows in strict_stratum(n, k))
    expect(is_upper_triangular(c), "compound of a triangular matrix not triangular", n=n, k=k)
    expect(triangular_spectrum(c) == want, "spectrum of the compound", n=n, k=k)


def compound_rank(rng):
    rows, cols = rng.randint(1, 4), rng.randint(1, 4)
    l = rng.randint(0, min(rows, cols))
    k = rng.randint(1, min(rows, cols))
    a = rg.of_rank(rng, rows, cols, l)
    expect(rank(compound(a, k).as_dense()) == math.comb(l, k), "rank law for compounds", l=l, k=k)


def compound_det(rng):
    n = rng.randint(1, 4)
    k = rng.randint(1, n)
    a = rg.dense(rng, n, n)
    expect(det(compound(a, k).as_dense()) == det(a) ** math.comb(n - 1, k - 1), "det law for compounds", n=n, k=k)


# --- multilinear maps -----------------------------------------------------

def _symmetric_tensor(rng, n_out, n, p):
    cache = {}

    def coeff(idx):
        key = (idx[0],) + tuple(sorted(idx[1:]))
        if key not in cache:
            cache[key] = rg.rational(rng)
        return cache[key]

    return tensor_build([n_out] + [n] * p, coeff)


def _alternating_tensor(rng, n_out, n, p):
    base = {}

    def coeff(idx):
        js = idx[1:]
        if len(set(js)) < len(js):
            return Fraction(0)
        order = sorted(range(len(js)), key=lambda t: js[t])
        sign = math.prod(-1 for i in range(len(order)) for j in range(i + 1, len(order)) if order[i] > order[j])
        key = (idx[0],) + tuple(sorted(js))
        if key not in base:
            base[key] = rg.rational(rng)
        return sign * base[key]

    return tensor_build([n_out] + [n] * p, coeff)


def sym_faithful(rng):
    n_out, n, p = rng.randint(1, 3), rng.randint(1, 3), rng.randint(0, 3)
    t = _symmetric_tensor(rng, n_out, n, p)
    m = SymMultiMap.from_tensor(t, p, n)
    args = [rg.vector(rng, n) for _ in range(p)]
    expect(eval_sym(m, args) == oracle_eval_from_tensor(t, args, n_out), "symmetric map evaluation", p=p, n=n)
    if p >= 2:
        perm = list(range(p))
        rng.shuffle(perm)
        expect(eval_sym(m, [args[i] for i in perm]) == eval_sym(m, args), "not symmetric", perm=perm)


def alt_faithful(rng):
    n_out, n, p = rng.randint(1, 3), rng.randint(1, 3), rng.randint(0, 3)
    t = _alternating_tensor(rng, n_out, n, p)
    m = AltMultiMap.from_tensor(t, p, n)
    args = [rg.vector(rng, n) for _ in range(p)]
    expect(eval_alt(m, args) == oracle_eval_from_tensor(t, args, n_out), "alternating map evaluation", p=p, n=n)
    if p >= 2:
        perm = list(range(p))
        rng.shuffle(perm)
        sign = math.prod(-1 for i in range(p) for j in range(i + 1, p) if perm[i] > perm[j])
        permuted = eval_alt(m, [args[i] for i in perm])
        expect(permuted == [sign * x for x in eval_alt(m, args)], "not alternating", perm=perm)


def _random_pairing(rng, n1, n2):
    n3 = rng.randint(1, 3)
    coeffs = [[[rg.rational(rng) for _ in range(n2)] for _ in range(n1)] for _ in range(n3)]
    return BilinearMap.from_tensor(coeffs, n1, n2), coeffs


def pairing_padding(rng):
    n1, n2 = rng.randint(1, 3), rng.randint(1, 3)
    c, coeffs = _random_pairing(rng, n1, n2)
    x, y = rg.vector(rng, n1), rg.vector(rng, n2)
    want = [sum((coeffs[k][i][j] * x[i] * y[j] for i in range(n1) for j in range(n2)), Fraction(0))
            for k in range(len(coeffs))]
    expect(c(x, y) == want, "C((x,0) odot (0,y)) != bilinear form")


def sym_product_law(rng):
    n, p, q = rng.randint(1, 3), rng.randint(0, 2), rng.randint(0, 2)
    d1, d2 = rng.randint(1, 3), rng.randint(1, 3)
    a = SymMultiMap.from_tensor(_symmetric_tensor(rng, d1, n, p), p, n)
    b = SymMultiMap.from_tensor(_symmetric_tensor(rng, d2, n, q), q, n)
    c, _ = _random_pairing(rng, d1, d2)
    args = [rg.vector(rng, n) for _ in range(p + q)]
    expect(eval_sym(product_sym(a, b, c), args) == product_sym_by_definition(a, b, c, args),
           "symmetric product matrix != symmetrised definition", p=p, q=q)


def alt_product_law(rng):
    n, p, q = rng.randint(1, 3), rng.randint(0, 2), rng.randint(0, 2)
    d1, d2 = rng.randint(1, 3), rng.randint(1, 3)
    a = AltMultiMap.from_tensor(_alternating_tensor(rng, d1, n, p), p, n)
    b = AltMultiMap.from_tensor(_alternating_tensor(rng, d2, n, q), q, n)
    c, _ = _random_pairing(rng, d1, d2)
    args = [rg.vector(rng, n) for _ in range(p + q)]
    expect(eval_alt(product_alt(a, b, c), args) == product_alt_by_definition(a, b, c, args),
           "alternating product matrix != shuffle definition", p=p, q=q)


def same_space_shortcuts(rng):
    n, d, p, q = rng.randint(1, 3), rng.randint(1, 3), rng.randint(0, 2), rng.randint(0, 2)
    a = SymMultiMap.from_tensor(_symmetric_tensor(rng, d, n, p), p, n)
    b = SymMultiMap.from_tensor(_symmetric_tensor(rng, d, n, q), q, n)
    c_sym = rg.sym(rng, rng.randint(1, 3), d, 1, 2)
    args = [rg.vector(rng, n) for _ in range(p + q)]
    short = eval_sym(product_sym_same_space(a, b, c_sym), args)
    expect(short == eval_sym(product_sym(a, b, symmetric_pairing(c_sym)), args),
           "symmetric same-space shortcut", p=p, q=q)
    a2 = AltMultiMap.from_tensor(_alternating_tensor(rng, d, n, p), p, n)
    b2 = AltMultiMap.from_tensor(_alternating_tensor(rng, d, n, q), q, n)
    c_alt = rg.alt(rng, rng.randint(1, 3), d, 1, 2)
    short = eval_alt(product_alt_same_space(a2, b2, c_alt), args)
    expect(short == eval_alt(product_alt(a2, b2, alternating_pairing(c_alt)), args),
           "alternating same-space shortcut", p=p, q=q)


# --- norms ----------------------------------------------------------------

def _leq(lhs, rhs):
    return lhs <= rhs * (1 + NORM_SLACK) + NORM_SLACK * 1e-300


def norm_axioms(rng):
    rho = rng.choice(NORM_RHOS)
    n, n_prime = rng.randint(1, 4), rng.randint(1, 4)
    p, pp = rng.randint(0, 2), rng.randint(0, 2)
    a, b = rg.alt(rng, n, n_prime, p, pp), rg.alt(rng, n, n_prime, p, pp)
    lam = rg.rational(rng)
    na, nb = holder_norm(a, rho), holder_norm(b, rho)
    expect((na == 0) == a.is_zero(), "definiteness", rho=rho)
    expect(math.isclose(holder_norm(a * lam, rho), abs(to_float(lam)) * na, rel_tol=NORM_SLACK, abs_tol=1e-300),
           "homogeneity", rho=rho)
    expect(_leq(holder_norm(a + b, rho), na + nb), "triangle inequality", rho=rho)


def norm_submultiplicative(rng, rho=None):
    rho = rng.choice(NORM_RHOS) if rho is None else rho
    a, b = _alt_pair(rng)
    expect(_leq(holder_norm(wedge(a, b), rho), holder_norm(a, rho) * holder_norm(b, rho)),
           "||A wedge B|| > ||A|| ||B||", rho=rho, sig=(a.signature, b.signature))


# --- suites ---------------------------------------------------------------

SUITES: dict[str, tuple] = {
    "multiindex": (graded_order_translation, rank_roundtrip, binomial_vandermonde),
    "shuffles": (shuffle_bijections_exhaustive,),
    "exactnum": (field_axioms,),
    "linalg": (det_multiplicative, rank_transpose_inverse),
    "odot-laws": (odot_matches_definition, odot_commutative, odot_bilinear, odot_associative,
                  odot_triangular_closure, odot_no_zero_divisors, odot_mixed_identities),
    "odot-powers": (vector_powers, scaled_power_factorization, common_eigenvector, pointwise_power_law,
                    sym_power_functorial),
    "sym-power-invariants": (sym_power_spectrum, sym_power_rank, sym_power_det),
    "polymap": (eval_matches_monomials, compose_pointwise, exp_of_image, exp_of_composition,
                compose_associative, change_of_variables_law, gl_rank_invariance),
    "wedge-laws": (wedge_matches_definition, wedge_anticommutative, wedge_bilinear, wedge_associative,
                   wedge_triangular_closure, multi_wedge_fold, vector_wedges, wedge_of_vectors_is_det),
    "compound": (compound_minors, compound_permutation_sums, compound_multiplicative, compound_eigenvectors,
                 compound_spectrum, compound_rank, compound_det),
    "multilinear": (sym_faithful, alt_faithful, pairing_padding, sym_product_law, alt_product_law,
                    same_space_shortcuts),
    "norms": (norm_axioms, norm_submultiplicative),
}

EXHAUSTIVE = {shuffle_bijections_exhaustive}
