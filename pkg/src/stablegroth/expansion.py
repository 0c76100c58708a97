"""
Expansions of stable Grothendieck polynomials in the G_lambda basis.

The coefficient of G_lambda in G_pi is a signed count of increasing tableaux
of shape lambda whose column word is a Hecke word for pi^{-1}.  Those
tableaux are generated one column at a time: a column C is split off as
``pi = w(C) . sigma`` and the rest of the tableau is found recursively for
sigma, attached to the right of C.  A branch is only followed when the
maximal tableau M_sigma can itself be attached to C, which is exactly the
condition for the branch to contain a solution.

The monomial expansions here (compatible pairs, set-valued tableaux, the
divided-difference recursion) are independent routes used to cross-check
the tableau counts.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .hecke import (Partition, Permutation, conjugate_by_longest, identity, left_hecke_preimages,
                    longest, partition, reduced_word, simple)
from .polynomial import SparsePolynomial
from .tableaux import (Column, Tableau, all_increasing_tableaux, all_setvalued_tableaux,
                       complement, from_columns, shape, skew_boxes,
                       tableau_permutation)


class Expansion(dict):
    """Finitely supported map from partitions (or tuples of partitions) to
    nonzero integers.

    ``complete`` is False when a degree cap cut off terms that exist.
    """

    def __init__(self, *args, complete: bool = True, **kwargs):
        super().__init__(*args, **kwargs)
        self.complete = complete

    def add(self, key, coeff: int):
        total = self.get(key, 0) + coeff
        if total:
            self[key] = total
        else:
            self.pop(key, None)

    def sorted_items(self) -> list:
        return sorted(self.items(), key=lambda kv: _term_order(kv[0]))

    def restrict_degree(self, max_degree: int) -> Expansion:
        return Expansion({k: v for k, v in self.items() if _degree(k) <= max_degree},
                         complete=self.complete)

    def max_degree(self) -> int:
        return max((_degree(k) for k in self), default=0)

    def to_json(self) -> list[dict]:
        if any(_is_sequence_key(k) for k in self):
            return [{"shapes": [list(p) for p in k], "coeff": v} for k, v in self.sorted_items()]
        return [{"shape": list(k), "coeff": v} for k, v in self.sorted_items()]


def _is_sequence_key(key) -> bool:
    return any(isinstance(part, tuple) for part in key)


def _degree(key) -> int:
    return sum(sum(p) for p in key) if _is_sequence_key(key) else sum(key)


def _term_order(key):
    return (_degree(key), key)


# -- the maximal tableau ---------------------------------------------------------

@lru_cache(maxsize=None)
def max_tableau(p: Permutation) -> Tableau:
    """The increasing tableau of dominance-maximal shape representing p.

    Its top row is read off from right to left: each entry is the largest
    descent, below the entry just chosen, of what remains of p after the
    entries chosen so far are stripped from the right.  The rows below form
    the maximal tableau of the remaining permutation.

    >>> max_tableau(Permutation((2, 4, 1, 5, 3)))
    ((1, 2, 4), (3,))
    """
    rows = []
    while not p.is_identity():
        row: list[int] = []
        bound = None
        while True:
            ds = [d for d in p.descents() if bound is None or d < bound]
            if not ds:
                break
            bound = max(ds)
            row.append(bound)
            p = p * simple(bound)
        rows.append(tuple(reversed(row)))
    return tuple(rows)


def _attachable(col: Sequence[int], left: Sequence[int] | None) -> bool:
    if left is None:
        return True
    return len(col) <= len(left) and all(col[r] > left[r] for r in range(len(col)))


def _first_column(t: Tableau) -> Column:
    return tuple(row[0] for row in t)


def _preimages(letter: int, perms) -> set[Permutation]:
    return {q for p in perms for q in left_hecke_preimages(letter, p)}


def _split_columns(pi: Permutation, first: int, height: int, left: Column | None
                   ) -> Iterator[tuple[Column, Permutation]]:
    """Pairs (C, sigma) with ``pi = w(C) . sigma``, C of the given height with
    top entry ``first``, C attachable to ``left``, and sigma fixing ``first``.

    w(C) is read bottom to top, so the bottom entry is peeled off pi first.
    """
    top_letter = pi.size - 1

    def rec(row: int, upper: int, states: set[Permutation], acc: Column):
        if row == 1:
            if first >= upper or (left is not None and left[0] >= first):
                return
            for sigma in _preimages(first, states):
                if sigma(first) == first:
                    yield (first,) + acc, sigma
            return
        lo = first + row - 1
        if left is not None:
            lo = max(lo, left[row - 1] + 1)
        for v in range(lo, upper):
            nxt = _preimages(v, states)
            if nxt:
                yield from rec(row - 1, v, nxt, (v,) + acc)

    yield from rec(height, top_letter + 1, {pi}, ())


class _Search:
    """Column-by-column generation of increasing tableaux for a permutation."""

    def __init__(self, max_boxes=None, heights=None, max_rows=None, max_cols=None, prune=True):
        self.max_boxes = max_boxes
        self.heights = tuple(heights) if heights is not None else None
        self.max_rows = max_rows
        self.max_cols = max_cols
        self.prune = prune
        self.truncated = False

    def _has_solution(self, sigma: Permutation, col: Column | None) -> bool:
        return _attachable(_first_column(max_tableau(sigma)), col)

    def run(self, pi: Permutation, left: Column | None = None) -> Iterator[list[Column]]:
        if self.max_boxes is not None and pi.length() > self.max_boxes:
            if self._has_solution(pi, left):
                self.truncated = True
            return
        yield from self._search(pi, left, 0, 0)

    def _search(self, pi, left, index, boxes):
        if pi.is_identity():
            if self.heights is None or index == len(self.heights):
                yield []
            return
        if self.heights is not None and index >= len(self.heights):
            return
        if self.max_cols is not None and index >= self.max_cols:
            return
        if self.prune and not self._has_solution(pi, left):
            return
        first = next(j for j in range(1, pi.size + 1) if pi(j) > j)
        tallest = pi.size - first
        if left is not None:
            tallest = min(tallest, len(left))
        if self.max_rows is not None:
            tallest = min(tallest, self.max_rows)
        heights = range(1, tallest + 1)
        if self.heights is not None:
            want = self.heights[index]
            heights = [want] if want <= tallest else []
        for k in heights:
            for col, sigma in _split_columns(pi, first, k, left):
                if self.max_boxes is not None and boxes + k + sigma.length() > self.max_boxes:
                    if sigma.is_identity() or self._has_solution(sigma, col):
                        self.truncated = True
                    continue
                for rest in self._search(sigma, col, index + 1, boxes + k):
                    yield [col] + rest


def increasing_tableaux_for(p: Permutation, max_boxes: int | None = None,
                            left_column: Sequence[int] | None = None,
                            shape: Sequence[int] | None = None,
                            max_rows: int | None = None, max_cols: int | None = None,
                            prune: bool = True) -> list[Tableau]:
    """All increasing tableaux T with w(T) = p.

    Optional constraints: at most ``max_boxes`` boxes, attachable to the right
    of ``left_column``, a fixed ``shape``, or fitting in a
    ``max_rows`` x ``max_cols`` rectangle.  ``prune=False`` disables the
    maximal-tableau test (slow; for cross-checking).
    """
    return _increasing_tableaux(p, max_boxes, left_column, shape, max_rows, max_cols, prune)[0]


def _increasing_tableaux(p, max_boxes=None, left_column=None, shape_=None, max_rows=None,
                         max_cols=None, prune=True) -> tuple[list[Tableau], bool]:
    if max_boxes is not None and max_boxes <= 0 and not p.is_identity():
        raise ValueError("max_boxes must be positive for a nonidentity permutation")
    heights = None
    if shape_ is not None:
        lam = partition(shape_)
        heights = tuple(sum(1 for part in lam if part > j) for j in range(lam[0] if lam else 0))
    left = tuple(left_column) if left_column is not None else None
    search = _Search(max_boxes, heights, max_rows, max_cols, prune)
    found = [from_columns(cols) for cols in search.run(p, left)]
    found.sort(key=lambda t: (sum(shape(t)), shape(t), t))
    return found, not search.truncated


def decreasing_tableaux_for(p: Permutation, max_boxes: int | None = None,
                            shape: Sequence[int] | None = None,
                            max_rows: int | None = None, max_cols: int | None = None,
                            prune: bool = True) -> list[Tableau]:
    """All decreasing tableaux T with w(T) = p, via the order-reversing
    relabelling x -> n - x, which conjugates by the longest element of S_n."""
    return _decreasing_tableaux(p, max_boxes, shape, max_rows, max_cols, prune)[0]


def _decreasing_tableaux(p, max_boxes=None, shape_=None, max_rows=None, max_cols=None,
                         prune=True) -> tuple[list[Tableau], bool]:
    n = p.size
    found, complete = _increasing_tableaux(conjugate_by_longest(p, n), max_boxes, None, shape_,
                                           max_rows, max_cols, prune)
    found = [complement(t, n) for t in found]
    found.sort(key=lambda t: (sum(shape(t)), shape(t), t))
    return found, complete


def increasing_tableaux_brute_force(p: Permutation, max_boxes: int) -> list[Tableau]:
    """Every increasing tableau with at most max_boxes boxes and entries below
    p.size, filtered by its permutation."""
    found = [t for t in all_increasing_tableaux(max(p.size - 1, 0), max_boxes)
             if tableau_permutation(t) == p]
    found.sort(key=lambda t: (sum(shape(t)), shape(t), t))
    return found


# -- stable coefficients ------------------------------------------------------------

def _signed_count(tableaux, base: int, complete: bool) -> Expansion:
    result = Expansion(complete=complete)
    for t in tableaux:
        lam = shape(t)
        result.add(lam, -1 if (sum(lam) - base) % 2 else 1)
    return result


def stable_coefficients(p: Permutation, max_degree: int | None = None) -> Expansion:
    """Coefficients c_{p,lambda} of G_p = sum c_{p,lambda} G_lambda.

    Without ``max_degree`` the expansion is always complete; with it, terms of
    larger degree are dropped and ``complete`` reports whether any existed.

    >>> dict(stable_coefficients(Permutation((3, 1, 5, 2, 4))))
    {(2, 2): 1, (3, 1): 1, (3, 2): -1}
    """
    base = p.length()
    if max_degree is not None and max_degree < base:
        raise ValueError(f"max_degree {max_degree} is below the length {base}")
    found, complete = _increasing_tableaux(p.inverse(), max_degree)
    return _signed_count(found, base, complete)


def stable_coefficients_decreasing(p: Permutation, max_degree: int | None = None) -> Expansion:
    base = p.length()
    if max_degree is not None and max_degree < base:
        raise ValueError(f"max_degree {max_degree} is below the length {base}")
    found, complete = _decreasing_tableaux(p, max_degree)
    return _signed_count(found, base, complete)


def stable_coefficient(p: Permutation, lam: Sequence[int], decreasing: bool = False) -> int:
    """A single coefficient c_{p,lambda}, enumerating only tableaux of shape lambda."""
    lam = partition(lam)
    if decreasing:
        count = len(decreasing_tableaux_for(p, shape=lam))
    else:
        count = len(increasing_tableaux_for(p.inverse(), shape=lam))
    return -count if (sum(lam) - p.length()) % 2 else count


# -- monomial expansions ----------------------------------------------------------

def _is_weak_prefix(u: Permutation, target: Permutation) -> bool:
    return (u.inverse() * target).length() == target.length() - u.length()


def monomials_compatible(p: Permutation, num_vars: int, max_degree: int) -> SparsePolynomial:
    """G_p in num_vars variables up to degree max_degree, summed over compatible pairs.

    A compatible pair is a choice, for each variable x_v, of a set of letters
    read in decreasing order; the word is the concatenation over v.
    """
    letters = range(1, p.size)
    target = p.length()
    zero = (0,) * num_vars
    states: dict[tuple[Permutation, tuple[int, ...]], int] = {(identity(), zero): 1}
    for v in range(num_vars):
        nxt: dict[tuple[Permutation, tuple[int, ...]], int] = {}
        for (u, exps), count in states.items():
            room = max_degree - sum(exps)
            for k in range(0, min(room, len(letters)) + 1):
                for block in combinations(letters, k):
                    q = u
                    for letter in reversed(block):
                        q = q.right_hecke(letter)
                    if not _is_weak_prefix(q, p):
                        continue
                    e = exps[:v] + (k,) + exps[v + 1:]
                    nxt[(q, e)] = nxt.get((q, e), 0) + count
        states = nxt
    poly = SparsePolynomial(num_vars, (), max_degree)
    for (u, exps), count in states.items():
        if u == p:
            poly._add(exps, -count if (sum(exps) - target) % 2 else count)
    return poly


def monomials_setvalued(outer: Sequence[int], num_vars: int, max_degree: int,
                        inner: Sequence[int] = ()) -> SparsePolynomial:
    """G_{outer/inner} in num_vars variables up to degree max_degree, summed over
    set-valued tableaux."""
    outer, inner = partition(outer), partition(inner)
    base = sum(outer) - sum(inner)
    poly = SparsePolynomial(num_vars, (), max_degree)
    for s in all_setvalued_tableaux(outer, inner, num_vars, max_degree):
        d = s.degree()
        poly._add(s.exponents(num_vars), -1 if (d - base) % 2 else 1)
    return poly


def combine_setvalued(expansion: Expansion, num_vars: int, max_degree: int) -> SparsePolynomial:
    """sum_lambda c_lambda * G_lambda(x_1..x_num_vars), truncated."""
    total = SparsePolynomial(num_vars, (), max_degree)
    for lam, c in expansion.items():
        if sum(lam) <= max_degree:
            total = total + monomials_setvalued(lam, num_vars, max_degree) * c
    return total


@lru_cache(maxsize=None)
def _grothendieck(p: Permutation, n: int) -> SparsePolynomial:
    if p == longest(n):
        exps = tuple(n - i for i in range(1, n + 1))
        return SparsePolynomial(n, {exps: 1})
    i = next(k for k in range(1, n) if p(k) < p(k + 1))
    g = _grothendieck(p * simple(i), n)
    f = (SparsePolynomial.constant(1, n) - SparsePolynomial.variable(i + 1, n)) * g
    return (f - f.swap(i)).divide_by_difference(i)


def grothendieck_recursion(p: Permutation, n: int) -> SparsePolynomial:
    """The Grothendieck polynomial of p in S_n (second alphabet set to zero),
    by divided differences from the longest element."""
    if p.size > n:
        raise ValueError(f"{p} is not in S_{n}")
    return _grothendieck(p, n).copy()


# -- skew shapes via set-valued tableaux -----------------------------------------

def skew_lr_coefficients(outer: Sequence[int], inner: Sequence[int],
                         max_degree: int) -> Expansion:
    """Expansion of G_{outer/inner}: the coefficient of G_nu counts set-valued
    tableaux whose column word is a reverse lattice word of content nu.

    Boxes are filled in reverse reading order (columns right to left, each top
    to bottom, entries largest first) so the lattice condition can be checked
    on the suffix built so far.
    """
    outer, inner = partition(outer), partition(inner)
    if len(inner) > len(outer) or any(a < b for a, b in zip(outer, inner)):
        raise ValueError(f"{inner} is not contained in {outer}")
    base = sum(outer) - sum(inner)
    boxes = sorted(skew_boxes(outer, inner), key=lambda rc: (-rc[1], rc[0]))
    filling: dict[tuple[int, int], tuple[int, ...]] = {}
    counts: list[int] = [0] * (max_degree + 2)
    result = Expansion()

    def lattice_ok(x):
        return x == 1 or counts[x - 1] > counts[x]

    def fill(idx: int, used: int):
        if idx == len(boxes):
            nu = partition(c for c in counts[1:] if c)
            result.add(nu, -1 if (used - base) % 2 else 1)
            return
        r, c = boxes[idx]
        upper = filling[(r, c + 1)][0] if (r, c + 1) in filling else max_degree + 1
        lower = filling[(r - 1, c)][-1] + 1 if (r - 1, c) in filling else 1
        remaining = len(boxes) - idx - 1

        def choose(chosen: list[int], below: int, used_now: int):
            # chosen holds this box's entries, largest first; next pick is < below
            if chosen:
                filling[(r, c)] = tuple(reversed(chosen))
                fill(idx + 1, used_now)
                del filling[(r, c)]
            if used_now + 1 + remaining > max_degree:
                return
            for x in range(min(below - 1, upper), lower - 1, -1):
                if not lattice_ok(x):
                    continue
                counts[x] += 1
                chosen.append(x)
                choose(chosen, x, used_now + 1)
                chosen.pop()
                counts[x] -= 1

        choose([], max_degree + 2, used)

    if base <= max_degree:
        fill(0, 0)
    return result


# -- universal coefficients ----------------------------------------------------------

@lru_cache(maxsize=None)
def _bounded_tableaux(max_entry: int, max_boxes: int) -> tuple[tuple[Partition, Permutation], ...]:
    return tuple((shape(t), tableau_permutation(t))
                 for t in all_increasing_tableaux(max_entry, max_boxes))


def universal_coefficients(p: Permutation, n: int, max_degree: int) -> Expansion:
    """Coefficients indexed by sequences (mu_1, ..., mu_{2n-1}): signed counts of
    increasing tableaux T_k of shape mu_k with entries at most min(k, 2n-k)
    and w(T_{2n-1} ... T_1) = p^{-1}.

    The permutation of the product is the Hecke product of the factors'
    permutations, so only those are multiplied.
    """
    if p.size > n + 1:
        raise ValueError(f"{p} is not in S_{n + 1}")
    target = p.inverse()
    base = p.length()
    slots = 2 * n - 1
    bounds = [min(k, 2 * n - k) for k in range(1, slots + 1)]
    # build w(T_{2n-1}) . w(T_{2n-2}) . ... from the left, pruning on weak prefixes
    states: dict[tuple[Permutation, int, tuple], int] = {(identity(), 0, ()): 1}
    for k in range(slots, 0, -1):
        nxt: dict = {}
        for (acc, deg, shapes), count in states.items():
            for lam, w in _bounded_tableaux(bounds[k - 1], max_degree):
                if deg + sum(lam) > max_degree:
                    continue
                prod = acc
                for letter in reduced_word(w):
                    prod = prod.right_hecke(letter)
                if not _is_weak_prefix(prod, target):
                    continue
                key = (prod, deg + sum(lam), (lam,) + shapes)
                nxt[key] = nxt.get(key, 0) + count
        states = nxt
    result = Expansion()
    for (acc, deg, shapes), count in states.items():
        if acc == target:
            result.add(shapes, -count if (deg - base) % 2 else count)
    return result

