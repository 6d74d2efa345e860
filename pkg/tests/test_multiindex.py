import itertools
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from multilin.multiindex import (
    MultiIndex,
    Permutation,
    StrictIndex,
    compare_graded,
    fixing_shuffles,
    is_shuffle,
    multi_binomial,
    multi_shuffles,
    multinomial,
    permutation_sign,
    rank_index,
    rank_strict,
    shuffle_decompose,
    shuffle_decompose_tail,
    shuffles,
    stratum,
    stratum_size,
    strict_size,
    strict_stratum,
    sub_indices,
    unrank_index,
)


def multi_indices(n, max_entry=4):
    return st.tuples(*[st.integers(0, max_entry)] * n)


def test_graded_order_small_cases():
    assert stratum(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert stratum(3, 1) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert compare_graded((0, 3), (1, 0)) == 1  # weight first
    assert compare_graded((2, 0), (1, 1)) == -1  # larger first coordinate comes first
    assert compare_graded((1, 1), (1, 1)) == 0


def test_zero_length_indices():
    assert stratum(0, 0) == ((),)
    assert stratum(0, 3) == ()
    assert stratum_size(0, 0) == 1 and stratum_size(0, 2) == 0
    assert rank_index(()) == 0


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("p", range(0, 6))
def test_rank_matches_enumeration(n, p):
    layer = stratum(n, p)
    assert len(layer) == stratum_size(n, p) == comb(p + n - 1, n - 1)
    assert [rank_index(a) for a in layer] == list(range(len(layer)))
    assert [unrank_index(n, p, i) for i in range(len(layer))] == list(layer)
    # enumeration is sorted by the graded key
    assert all(compare_graded(a, b) == -1 for a, b in zip(layer, layer[1:]))


def test_unrank_out_of_range():
    with pytest.raises(IndexError):
        unrank_index(2, 2, 3)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(multi_indices(n), multi_indices(n), multi_indices(n))))
def test_order_is_translation_invariant(abc):
    a, b, c = abc
    shift = lambda x: tuple(u + v for u, v in zip(x, c))  # noqa: E731
    assert compare_graded(a, b) == compare_graded(shift(a), shift(b))


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(multi_indices(n), multi_indices(n), multi_indices(n))))
def test_order_is_transitive_and_total(abc):
    a, b, c = abc
    if compare_graded(a, b) <= 0 and compare_graded(b, c) <= 0:
        assert compare_graded(a, c) <= 0
    assert (compare_graded(a, b) == 0) == (a == b)


@given(st.integers(1, 4).flatmap(lambda n: multi_indices(n, 3)))
def test_vandermonde_sum(a):
    for p in range(sum(a) + 1):
        assert sum(multi_binomial(a, b) for b in sub_indices(a, p)) == comb(sum(a), p)


def test_multi_binomial_off_cone_is_zero():
    assert multi_binomial((2, 1), (3, 0)) == 0
    assert multi_binomial((2, 1), (1, 1)) == 2
    assert multinomial(3, (2, 1)) == 3
    assert multinomial(3, (1, 1)) == 0


def test_multi_index_type():
    a = MultiIndex((2, 0, 1))
    assert a.weight() == 3 and a.factorial() == 2 and a.n == 3
    assert a.plus((0, 1, 0)) == (2, 1, 1)
    assert a.dominates((1, 0, 1)) and not a.dominates((0, 1, 0))
    with pytest.raises(ValueError):
        MultiIndex((1, -1))
    with pytest.raises(ValueError):
        a.plus((1, 1))


def test_strict_indices_colex():
    assert strict_stratum(3, 2) == ((1, 2), (1, 3), (2, 3))
    assert strict_stratum(4, 2) == ((1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4))
    assert strict_stratum(2, 0) == ((),)
    assert strict_stratum(2, 3) == ()
    for n in range(5):
        for p in range(n + 2):
            layer = strict_stratum(n, p)
            assert len(layer) == strict_size(n, p)
            assert [rank_strict(a) for a in layer] == list(range(len(layer)))
    with pytest.raises(ValueError):
        StrictIndex((2, 2))
    with pytest.raises(ValueError):
        StrictIndex((1, 5), n=4)


def test_permutation_basics():
    s = Permutation((2, 3, 1))
    assert s(1) == 2 and s.sign == 1
    assert (s * s.inverse()) == Permutation.identity(3)
    assert (s * Permutation((2, 1, 3))).images == (3, 2, 1)
    assert permutation_sign((2, 1, 3)) == -1
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


@given(st.permutations(range(1, 6)), st.permutations(range(1, 6)))
def test_sign_is_multiplicative(a, b):
    sa, sb = Permutation(a), Permutation(b)
    assert (sa * sb).sign == sa.sign * sb.sign


@pytest.mark.parametrize("p,q", [(0, 0), (1, 1), (2, 1), (2, 2), (3, 2)])
def test_shuffle_counts_and_membership(p, q):
    sh = shuffles(p, q)
    assert len(sh) == comb(p + q, p)
    assert all(is_shuffle(s, (p, q)) and sign == s.sign for s, sign in sh)
    all_perms = [Permutation(x) for x in itertools.permutations(range(1, p + q + 1))]
    assert sum(is_shuffle(s, (p, q)) for s in all_perms) == len(sh)


def test_multi_shuffle_count():
    assert len(multi_shuffles((1, 2, 2))) == 30  # 5! / (1! 2! 2!)
    with pytest.raises(ValueError):
        multi_shuffles((1, -1))


@pytest.mark.parametrize("p,q,r", list(itertools.product(range(4), repeat=3)))
def test_head_and_tail_decompositions_are_bijections(p, q, r):
    target = [s for s, _ in multi_shuffles((p, q, r))]
    heads = {t.images for t in fixing_shuffles(p, q, r, "head")}
    tails = {t.images for t in fixing_shuffles(p, q, r, "tail")}
    seen_head, seen_tail = set(), set()
    for s0 in target:
        sigma, tau = shuffle_decompose(s0, p, q, r)
        assert is_shuffle(sigma, (p, q + r)) and tau.images in heads and sigma * tau == s0
        seen_head.add((sigma.images, tau.images))
        sigma, tau = shuffle_decompose_tail(s0, p, q, r)
        assert is_shuffle(sigma, (p + q, r)) and tau.images in tails and sigma * tau == s0
        seen_tail.add((sigma.images, tau.images))
    # injective on the shuffle set, and the factor sets have the right sizes
    assert len(seen_head) == len(seen_tail) == len(target)
    assert len(target) == comb(p + q + r, p) * len(heads) == comb(p + q + r, r) * len(tails)


def test_decompose_rejects_non_shuffles():
    with pytest.raises(ValueError):
        shuffle_decompose(Permutation((2, 1, 3)), 2, 1, 0)
    with pytest.raises(ValueError):
        fixing_shuffles(1, 1, 1, "middle")
