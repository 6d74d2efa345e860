"""Multi-indices, strict indices and shuffle permutations.

Two index families label the rows and columns of the matrices in this
package:

* multi-indices ``a in I_n`` (tuples of nonnegative ints), ordered by weight
  and then by *decreasing* successive coordinates, so ``(2, 0) < (1, 1) <
  (0, 2)``;
* strict indices ``a in J_n(p)`` (strictly increasing tuples in ``1..n``),
  ordered colexicographically: last coordinate first.

Each weight stratum is stored densely in that order; :func:`rank_index` and
:func:`rank_strict` compute positions combinatorially.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Sequence


class MultiIndex(tuple):
    """An element of ``I_n``: a tuple of nonnegative integers."""

    def __new__(cls, entries: Iterable[int] = ()):
        entries = tuple(entries)
        for e in entries:
            if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                raise ValueError(f"multi-index entries must be nonnegative ints, got {entries!r}")
        return super().__new__(cls, entries)

    @property
    def n(self) -> int:
        return len(self)

    def weight(self) -> int:
        return sum(self)

    def factorial(self) -> int:
        out = 1
        for e in self:
            out *= factorial(e)
        return out

    def plus(self, other: Sequence[int]) -> "MultiIndex":
        _check_same_length(self, other)
        return MultiIndex(a + b for a, b in zip(self, other))

    def minus(self, other: Sequence[int]) -> "MultiIndex":
        _check_same_length(self, other)
        return MultiIndex(a - b for a, b in zip(self, other))

    def dominates(self, other: Sequence[int]) -> bool:
        """``other << self``: coordinatewise ``other[i] <= self[i]``."""
        _check_same_length(self, other)
        return all(b <= a for a, b in zip(self, other))

    def __repr__(self):
        return f"MultiIndex({tuple(self)!r})"


class StrictIndex(tuple):
    """An element of ``J_n(p)``: a strictly increasing tuple of 1-based ints."""

    def __new__(cls, entries: Iterable[int] = (), n: int | None = None):
        entries = tuple(entries)
        prev = 0
        for e in entries:
            if not isinstance(e, int) or isinstance(e, bool) or e <= prev:
                raise ValueError(f"strict index must be strictly increasing positive ints, got {entries!r}")
            prev = e
        if n is not None and entries and entries[-1] > n:
            raise ValueError(f"strict index {entries!r} exceeds dimension {n}")
        return super().__new__(cls, entries)

    def __repr__(self):
        return f"StrictIndex({tuple(self)!r})"


def _check_same_length(a, b):
    if len(a) != len(b):
        raise ValueError(f"multi-index length mismatch: {len(a)} vs {len(b)}")


# --- graded order on I_n -------------------------------------------------

def graded_key(a: Sequence[int]) -> tuple:
    return (sum(a),) + tuple(-x for x in a)


def compare_graded(a: Sequence[int], b: Sequence[int]) -> int:
    """Return -1, 0 or 1 as ``a`` sorts before, equal to, or after ``b``."""
    _check_same_length(a, b)
    ka, kb = graded_key(a), graded_key(b)
    return (ka > kb) - (ka < kb)


def stratum_size(n: int, p: int) -> int:
    """Number of weight-``p`` multi-indices of length ``n``."""
    if p < 0:
        return 0
    if n == 0:
        return 1 if p == 0 else 0
    return comb(p + n - 1, n - 1)


@lru_cache(maxsize=None)
def stratum(n: int, p: int) -> tuple[tuple[int, ...], ...]:
    """All weight-``p`` multi-indices of ``I_n`` in graded order."""
    if n == 0:
        return ((),) if p == 0 else ()
    if n == 1:
        return ((p,),) if p >= 0 else ()
    out = []
    for first in range(p, -1, -1):
        for rest in stratum(n - 1, p - first):
            out.append((first,) + rest)
    return tuple(out)


def rank_index(a: Sequence[int]) -> int:
    """Position of ``a`` within its weight stratum (0-based, graded order)."""
    n = len(a)
    rank = 0
    rem = sum(a)
    for i in range(n - 1):
        k = n - 1 - i  # coordinates left after this one
        # indices agreeing so far but with a larger i-th entry come first
        rank += comb(rem - a[i] - 1 + k, k) if rem > a[i] else 0
        rem -= a[i]
    return rank


def unrank_index(n: int, p: int, position: int) -> MultiIndex:
    size = stratum_size(n, p)
    if not 0 <= position < size:
        raise IndexError(f"position {position} out of range for n={n}, p={p} (size {size})")
    out = []
    rem = p
    for i in range(n - 1):
        k = n - 1 - i
        first = rem
        while True:
            block = stratum_size(k, rem - first)
            if position < block:
                break
            position -= block
            first -= 1
        out.append(first)
        rem -= first
    if n:
        out.append(rem)
    return MultiIndex(out)


@lru_cache(maxsize=None)
def stratum_ranks(n: int, p: int) -> dict:
    return {a: i for i, a in enumerate(stratum(n, p))}


def multi_binomial(a: Sequence[int], b: Sequence[int]) -> int:
    """``a! / (b! (a-b)!)``, or 0 unless ``b << a``."""
    _check_same_length(a, b)
    out = 1
    for x, y in zip(a, b):
        if y < 0 or y > x:
            return 0
        out *= comb(x, y)
    return out


def multinomial(m: int, a: Sequence[int]) -> int:
    """``m! / a!`` when ``|a| == m``, else 0."""
    if sum(a) != m:
        return 0
    out = factorial(m)
    for x in a:
        out //= factorial(x)
    return out


@lru_cache(maxsize=None)
def sub_indices(a: tuple[int, ...], p: int) -> tuple[tuple[int, ...], ...]:
    """All ``b << a`` with ``|b| == p``, in graded order."""
    return tuple(b for b in stratum(len(a), p) if all(y <= x for x, y in zip(a, b)))


# --- strict indices J_n(p) -----------------------------------------------

def strict_size(n: int, p: int) -> int:
    if p < 0 or p > n:
        return 0
    return comb(n, p)


@lru_cache(maxsize=None)
def strict_stratum(n: int, p: int) -> tuple[tuple[int, ...], ...]:
    """``J_n(p)`` in colexicographic order; ``J_n(0)`` is the empty tuple."""
    if p < 0 or p > n:
        return ()
    combos = itertools.combinations(range(1, n + 1), p)
    return tuple(sorted(combos, key=lambda c: c[::-1]))


def rank_strict(a: Sequence[int]) -> int:
    return sum(comb(x - 1, i + 1) for i, x in enumerate(a))


@lru_cache(maxsize=None)
def strict_ranks(n: int, p: int) -> dict:
    return {a: i for i, a in enumerate(strict_stratum(n, p))}


# --- permutations and shuffles -------------------------------------------

class Permutation:
    """A bijection of ``{1..m}`` stored as its image tuple."""

    __slots__ = ("images", "_sign")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images!r}")
        self.images = images
        self._sign = None

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(range(1, m + 1))

    def __len__(self):
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    @property
    def sign(self) -> int:
        if self._sign is None:
            self._sign = permutation_sign(self.images)
        return self._sign

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition ``(self * other)(i) = self(other(i))``."""
        if len(self) != len(other):
            raise ValueError("cannot compose permutations of different sizes")
        return Permutation(self.images[j - 1] for j in other.images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Permutation(inv)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({self.images!r})"


def permutation_sign(images: Sequence[int]) -> int:
    inversions = 0
    m = len(images)
    for i in range(m):
        for j in range(i + 1, m):
            if images[i] > images[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


@lru_cache(maxsize=None)
def _shuffle_images(sizes: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    total = sum(sizes)
    if not sizes:
        return ((),)
    head, rest = sizes[0], sizes[1:]
    out = []
    for first in itertools.combinations(range(1, total + 1), head):
        remaining = [x for x in range(1, total + 1) if x not in first]
        for tail in _shuffle_images(rest):
            out.append(first + tuple(remaining[t - 1] for t in tail))
    return tuple(out)


def multi_shuffles(sizes: Sequence[int]) -> list[tuple[Permutation, int]]:
    """``S_{[p1]+...+[pk]}``: permutations increasing on each consecutive block.

    Ordered lexicographically by image tuple.
    """
    if any(s < 0 for s in sizes):
        raise ValueError(f"block sizes must be nonnegative: {sizes!r}")
    out = []
    for images in _shuffle_images(tuple(sizes)):
        perm = Permutation(images)
        out.append((perm, perm.sign))
    return out


def shuffles(p: int, q: int) -> list[tuple[Permutation, int]]:
    return multi_shuffles((p, q))


def is_shuffle(perm: Permutation, sizes: Sequence[int]) -> bool:
    if len(perm) != sum(sizes):
        return False
    start = 0
    for s in sizes:
        block = perm.images[start:start + s]
        if any(x >= y for x, y in zip(block, block[1:])):
            return False
        start += s
    return True


def fixing_shuffles(p: int, q: int, r: int, fixed: str) -> list[Permutation]:
    """``S_{(p)+[q]+[r]}`` (``fixed="head"``) or ``S_{[p]+[q]+(r)}`` (``fixed="tail"``)."""
    if fixed == "head":
        return [Permutation(tuple(range(1, p + 1)) + tuple(x + p for x in s.images))
                for s, _ in multi_shuffles((q, r))]
    if fixed == "tail":
        return [Permutation(s.images + tuple(range(p + q + 1, p + q + r + 1)))
                for s, _ in multi_shuffles((p, q))]
    raise ValueError(f"fixed must be 'head' or 'tail', got {fixed!r}")


def shuffle_decompose(s0: Permutation, p: int, q: int, r: int) -> tuple[Permutation, Permutation]:
    """Split ``s0 in S_{[p]+[q]+[r]}`` as ``sigma * tau``.

    ``sigma in S_{[p]+[q+r]}`` keeps the first block of ``s0`` and sorts the
    rest; ``tau = sigma^-1 * s0`` then fixes ``1..p``.
    """
    if not is_shuffle(s0, (p, q, r)):
        raise ValueError(f"{s0!r} is not a ({p},{q},{r})-shuffle")
    head = s0.images[:p]
    sigma = Permutation(head + tuple(sorted(s0.images[p:])))
    tau = sigma.inverse() * s0
    return sigma, tau


def shuffle_decompose_tail(s0: Permutation, p: int, q: int, r: int) -> tuple[Permutation, Permutation]:
    """Mirror of :func:`shuffle_decompose`: ``sigma in S_{[p+q]+[r]}``, ``tau in S_{[p]+[q]+(r)}``."""
    if not is_shuffle(s0, (p, q, r)):
        raise ValueError(f"{s0!r} is not a ({p},{q},{r})-shuffle")
    sigma = Permutation(tuple(sorted(s0.images[:p + q])) + s0.images[p + q:])
    tau = sigma.inverse() * s0
    return sigma, tau
