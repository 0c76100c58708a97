"""
Permutations of finite support and the 0-Hecke monoid.

A word ``a = a_1 ... a_p`` in the letters ``1, 2, ...`` stands for the
product ``s_{a_1} s_{a_2} ... s_{a_p}`` of simple transpositions, composed as
functions (the rightmost letter acts first).  Reducing a word in the 0-Hecke
monoid replaces each ordinary product by the Hecke product, in which
multiplying by ``s_i`` on a descent leaves the permutation unchanged.

>>> reduce_word([2, 1, 4, 3])
Permutation((3, 1, 5, 2, 4))
>>> reduce_word([1, 1])
Permutation((2, 1))
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _itertools_permutations
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Permutation", "Partition", "Word",
    "identity", "simple", "reduce_word", "hecke_product", "hecke_product_all",
    "length", "inverse", "descents", "left_descents", "reduced_word",
    "grassmannian_permutation", "skew_permutation", "conjugate_by_longest",
    "shift", "longest", "is_321_avoiding", "in_symmetric_group",
    "symmetric_group", "partition", "left_hecke_preimages",
    "hecke_factorizations", "weak_prefixes",
]

Word = tuple[int, ...]
Partition = tuple[int, ...]


@dataclass(frozen=True)
class Permutation:
    """A bijection of the positive integers fixing all but finitely many.

    Stored in one-line notation with trailing fixed points trimmed, so two
    permutations compare equal iff they agree everywhere.
    """
    oneline: tuple[int, ...] = ()

    def __post_init__(self):
        values = tuple(int(v) for v in self.oneline)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(f"{list(values)} is not a permutation of 1..{len(values)}")
        m = len(values)
        while m and values[m - 1] == m:
            m -= 1
        object.__setattr__(self, "oneline", values[:m])

    def __call__(self, i: int) -> int:
        if 1 <= i <= len(self.oneline):
            return self.oneline[i - 1]
        return i

    def __mul__(self, other: Permutation) -> Permutation:
        # ordinary composition: (p * q)(i) = p(q(i))
        m = max(len(self.oneline), len(other.oneline))
        return Permutation(tuple(self(other(i)) for i in range(1, m + 1)))

    def __repr__(self):
        return f"Permutation({self.oneline!r})"

    def __str__(self):
        return "".join(map(str, self.oneline)) if self.oneline else "id"

    @property
    def size(self) -> int:
        """Smallest m with the permutation in S_m (at least 1)."""
        return max(len(self.oneline), 1)

    def is_identity(self) -> bool:
        return not self.oneline

    def to_list(self, m: int | None = None) -> list[int]:
        m = len(self.oneline) if m is None else m
        return [self(i) for i in range(1, m + 1)]

    def inverse(self) -> Permutation:
        inv = [0] * len(self.oneline)
        for pos, val in enumerate(self.oneline, start=1):
            inv[val - 1] = pos
        return Permutation(tuple(inv))

    def length(self) -> int:
        return _length(self.oneline)

    def descents(self) -> frozenset[int]:
        w = self.oneline
        return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])

    def right_hecke(self, i: int) -> Permutation:
        """The Hecke product ``self . s_i``."""
        if self(i) > self(i + 1):
            return self
        w = self.to_list(max(len(self.oneline), i + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(tuple(w))

    def left_hecke(self, i: int) -> Permutation:
        """The Hecke product ``s_i . self``."""
        return self.inverse().right_hecke(i).inverse()


def _length(w: Sequence[int]) -> int:
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def partition(parts: Iterable[int]) -> Partition:
    """Normalize to a weakly decreasing tuple with trailing zeros removed."""
    p = tuple(int(x) for x in parts)
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in {p}")
    if any(p[k] < p[k + 1] for k in range(len(p) - 1)):
        raise ValueError(f"{p} is not weakly decreasing")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def identity() -> Permutation:
    return Permutation(())


def simple(i: int) -> Permutation:
    """The simple transposition s_i = (i, i+1)."""
    if i < 1:
        raise ValueError("simple transpositions are indexed from 1")
    w = list(range(1, i + 2))
    w[i - 1], w[i] = w[i], w[i - 1]
    return Permutation(tuple(w))


def longest(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


def reduce_word(word: Iterable[int]) -> Permutation:
    """The permutation represented by ``word`` in the 0-Hecke monoid."""
    p = identity()
    for letter in word:
        if letter < 1:
            raise ValueError(f"letters must be positive, got {letter}")
        p = p.right_hecke(letter)
    return p


@lru_cache(maxsize=None)
def reduced_word(p: Permutation) -> Word:
    """A reduced word for ``p``, built by stripping rightmost descents."""
    word = []
    w = list(p.oneline)
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i + 1)
                break
        else:
            break
    return tuple(reversed(word))


def hecke_product(p: Permutation, q: Permutation) -> Permutation:
    for letter in reduced_word(q):
        p = p.right_hecke(letter)
    return p


def hecke_product_all(perms: Iterable[Permutation]) -> Permutation:
    result = identity()
    for p in perms:
        result = hecke_product(result, p)
    return result


def length(p: Permutation) -> int:
    return p.length()


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def descents(p: Permutation) -> frozenset[int]:
    return p.descents()


def left_descents(p: Permutation) -> frozenset[int]:
    return p.inverse().descents()


def grassmannian_permutation(lam: Sequence[int], k: int) -> Permutation:
    """The permutation with ``pi(i) = i + lam_{k+1-i}`` for i <= k and no
    descent outside position k.

    >>> grassmannian_permutation((2, 2), 2)
    Permutation((3, 4, 1, 2))
    """
    lam = partition(lam)
    if len(lam) > k:
        raise ValueError(f"partition {lam} has more than {k} parts")
    padded = lam + (0,) * (k - len(lam))
    head = [i + padded[k - i] for i in range(1, k + 1)]
    m = max(head, default=0)
    m = max(m, k)
    used = set(head)
    tail = [v for v in range(1, m + 1) if v not in used]
    return Permutation(tuple(head + tail))


def skew_permutation(outer: Sequence[int], inner: Sequence[int], k: int) -> Permutation:
    """The 321-avoiding permutation ``pi_outer * pi_inner^{-1}`` of a skew shape."""
    outer, inner = partition(outer), partition(inner)
    if len(inner) > len(outer) or any(a < b for a, b in zip(outer, inner)):
        raise ValueError(f"{inner} is not contained in {outer}")
    return grassmannian_permutation(outer, k) * grassmannian_permutation(inner, k).inverse()


def in_symmetric_group(p: Permutation, n: int) -> bool:
    return len(p.oneline) <= n


def conjugate_by_longest(p: Permutation, n: int) -> Permutation:
    """``w0 p w0`` for the longest element w0 of S_n."""
    if not in_symmetric_group(p, n):
        raise ValueError(f"{p} is not in S_{n}")
    return Permutation(tuple(n + 1 - p(n + 1 - i) for i in range(1, n + 1)))


def shift(p: Permutation, r: int) -> Permutation:
    """``1^r x p``: prepend r fixed points."""
    return Permutation(tuple(range(1, r + 1)) + tuple(v + r for v in p.oneline))


def is_321_avoiding(p: Permutation) -> bool:
    w = p.oneline
    n = len(w)
    # a 321 pattern exists iff some middle entry has a larger entry before it
    # and a smaller entry after it
    for j in range(n):
        if any(w[i] > w[j] for i in range(j)) and any(w[k] < w[j] for k in range(j + 1, n)):
            return False
    return True


def symmetric_group(n: int) -> Iterator[Permutation]:
    for w in _itertools_permutations(range(1, n + 1)):
        yield Permutation(w)


def left_hecke_preimages(i: int, p: Permutation) -> tuple[Permutation, ...]:
    """All q with ``s_i . q = p``."""
    if p.inverse()(i) < p.inverse()(i + 1):
        return ()
    return (p, simple(i) * p)


def weak_prefixes(p: Permutation) -> set[Permutation]:
    """All u with ``l(u) + l(u^{-1} p) = l(p)``."""
    found = {identity()}
    frontier = [identity()]
    target = p.length()
    while frontier:
        u = frontier.pop()
        for i in range(1, p.size):
            if u(i) < u(i + 1):
                v = u * simple(i)
                if v not in found and (v.inverse() * p).length() == target - v.length():
                    found.add(v)
                    frontier.append(v)
    return found


def hecke_factorizations(p: Permutation) -> set[tuple[Permutation, Permutation]]:
    """All pairs (u, v) with ``u . v = p``.

    Any such u is a weak-order prefix of p, and for fixed u the solutions v
    are obtained by peeling the letters of a reduced word of u off the left.
    """
    result = set()
    for u in weak_prefixes(p):
        candidates = {p}
        for letter in reduced_word(u):
            candidates = {q for c in candidates for q in left_hecke_preimages(letter, c)}
        result.update((u, v) for v in candidates)
    return result
