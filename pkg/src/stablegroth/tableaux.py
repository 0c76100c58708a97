"""
Young tableaux in English notation: increasing, decreasing and set-valued.

Integer tableaux are plain tuples of row tuples.  Boxes are addressed by
1-based ``(row, col)`` pairs.  The column reading word reads each column from
bottom to top, starting with the leftmost column.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .hecke import Partition, Permutation, Word, partition, reduce_word

Tableau = tuple[tuple[int, ...], ...]
Column = tuple[int, ...]
ColumnDiagram = tuple[tuple[int, ...], ...]


def tableau(rows: Iterable[Iterable[int]]) -> Tableau:
    t = tuple(tuple(int(x) for x in row) for row in rows)
    return tuple(row for row in t if row)


def shape(t: Tableau) -> Partition:
    return tuple(len(row) for row in t)


def size(t: Tableau) -> int:
    return sum(len(row) for row in t)


def conjugate(lam: Sequence[int]) -> Partition:
    lam = partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def columns(t: Tableau) -> tuple[Column, ...]:
    if not t:
        return ()
    return tuple(tuple(row[j] for row in t if len(row) > j) for j in range(len(t[0])))


def from_columns(cols: Iterable[Sequence[int]]) -> Tableau:
    cols = [tuple(c) for c in cols if c]
    height = max((len(c) for c in cols), default=0)
    return tuple(tuple(c[r] for c in cols if len(c) > r) for r in range(height))


def _is_shape(t: Tableau) -> bool:
    return all(len(t[r]) >= len(t[r + 1]) for r in range(len(t) - 1)) and all(t)


def is_increasing(t: Tableau) -> bool:
    if not _is_shape(t) or any(x < 1 for row in t for x in row):
        return False
    for r, row in enumerate(t):
        for c, x in enumerate(row):
            if c + 1 < len(row) and not x < row[c + 1]:
                return False
            if r + 1 < len(t) and c < len(t[r + 1]) and not x < t[r + 1][c]:
                return False
    return True


def is_decreasing(t: Tableau) -> bool:
    if not _is_shape(t) or any(x < 1 for row in t for x in row):
        return False
    top = max((x for row in t for x in row), default=0) + 1
    return is_increasing(complement(t, top))


def complement(t: Tableau, n: int) -> Tableau:
    """Replace every entry x by n - x; swaps increasing and decreasing."""
    return tuple(tuple(n - x for x in row) for row in t)


def column_word(t: Tableau) -> Word:
    """
    >>> column_word(((1, 4), (3,)))
    (3, 1, 4)
    """
    return tuple(x for col in columns(t) for x in reversed(col))


def tableau_permutation(t: Tableau) -> Permutation:
    return reduce_word(column_word(t))


def decreasing_permutation(t: Tableau) -> Permutation:
    return reduce_word(column_word(t))


def column_permutation(col: Sequence[int]) -> Permutation:
    return reduce_word(reversed(col))


def contains_at_upper_left(t: Tableau, block: Tableau) -> bool:
    """True if ``block`` agrees with ``t`` on the boxes of ``block``."""
    if len(block) > len(t):
        return False
    return all(len(t[r]) >= len(row) and t[r][:len(row)] == row for r, row in enumerate(block))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Dominance order; partitions of different sizes are incomparable."""
    if sum(lam) != sum(mu):
        return False
    a = b = 0
    for k in range(max(len(lam), len(mu))):
        a += lam[k] if k < len(lam) else 0
        b += mu[k] if k < len(mu) else 0
        if a < b:
            return False
    return True


def format_tableau(t: Tableau) -> str:
    if not t:
        return "()"
    width = max(len(str(x)) for row in t for x in row)
    return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in t)


# -- enumeration ---------------------------------------------------------------

def all_increasing_tableaux(max_entry: int, max_boxes: int | None = None) -> Iterator[Tableau]:
    """Every increasing tableau with entries in 1..max_entry, column by column."""
    letters = range(1, max_entry + 1)

    def extend(prev: Column | None, cols: list[Column], boxes: int):
        yield from_columns(cols)
        height = len(prev) if prev is not None else max_entry
        for k in range(1, height + 1):
            if max_boxes is not None and boxes + k > max_boxes:
                break
            for col in combinations(letters, k):
                if prev is None or all(col[r] > prev[r] for r in range(k)):
                    yield from extend(col, cols + [col], boxes + k)

    yield from extend(None, [], 0)


def all_decreasing_tableaux(max_entry: int, max_boxes: int | None = None) -> Iterator[Tableau]:
    for t in all_increasing_tableaux(max_entry, max_boxes):
        yield complement(t, max_entry + 1)


def random_increasing_tableau(rng: random.Random, max_boxes: int, max_entry: int) -> Tableau:
    """A random increasing tableau; shapes are grown box by box at random."""
    while True:
        target = rng.randint(0, max_boxes)
        lam: list[int] = []
        for _ in range(target):
            addable = [r for r in range(len(lam) + 1)
                       if r == len(lam) or r == 0 or lam[r] < lam[r - 1]]
            r = rng.choice(addable)
            if r == len(lam):
                lam.append(1)
            else:
                lam[r] += 1
        rows: list[list[int]] = []
        ok = True
        for r, part in enumerate(lam):
            row: list[int] = []
            for c in range(part):
                lo = 1
                if c:
                    lo = max(lo, row[c - 1] + 1)
                if r:
                    lo = max(lo, rows[r - 1][c] + 1)
                # leave room for the boxes forced below and to the right
                hi = max_entry - (part - c - 1)
                if lo > hi:
                    ok = False
                    break
                row.append(rng.randint(lo, hi))
            if not ok:
                break
            rows.append(row)
        if ok and is_increasing(tableau(rows)):
            return tableau(rows)


# -- set-valued tableaux ---------------------------------------------------------

def skew_boxes(outer: Partition, inner: Partition) -> Iterator[tuple[int, int]]:
    for r in range(1, len(outer) + 1):
        for c in range((inner[r - 1] if r <= len(inner) else 0) + 1, outer[r - 1] + 1):
            yield r, c


@dataclass(frozen=True)
class SetValuedTableau:
    """A (skew) shape filled with nonempty sets, weakly increasing along rows
    and strictly increasing down columns.

    ``cells[r]`` lists the sets of row r+1 from left to right, starting at
    column ``inner[r] + 1``.
    """
    outer: Partition
    inner: Partition
    cells: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        outer, inner = partition(self.outer), partition(self.inner)
        if len(inner) > len(outer) or any(a < b for a, b in zip(outer, inner)):
            raise ValueError(f"{inner} is not contained in {outer}")
        cells = tuple(tuple(tuple(sorted(set(box))) for box in row) for row in self.cells)
        cells = cells + ((),) * (len(outer) - len(cells))
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "cells", cells)
        if len(cells) != len(outer):
            raise ValueError("cells do not match the shape")
        for r, row in enumerate(cells):
            if len(row) != outer[r] - self.inner_part(r + 1):
                raise ValueError(f"row {r + 1} has {len(row)} cells, shape needs "
                                 f"{outer[r] - self.inner_part(r + 1)}")
        if not self.is_valid():
            raise ValueError("cells violate the set-valued tableau conditions")

    def inner_part(self, row: int) -> int:
        return self.inner[row - 1] if row <= len(self.inner) else 0

    def boxes(self) -> Iterator[tuple[int, int]]:
        return skew_boxes(self.outer, self.inner)

    def get(self, r: int, c: int) -> tuple[int, ...] | None:
        if 1 <= r <= len(self.outer) and self.inner_part(r) < c <= self.outer[r - 1]:
            return self.cells[r - 1][c - self.inner_part(r) - 1]
        return None

    def is_valid(self) -> bool:
        for r, c in self.boxes():
            box = self.get(r, c)
            if not box or box[0] < 1:
                return False
            right = self.get(r, c + 1)
            if right is not None and not box[-1] <= right[0]:
                return False
            below = self.get(r + 1, c)
            if below is not None and not box[-1] < below[0]:
                return False
        return True

    def degree(self) -> int:
        return sum(len(box) for row in self.cells for box in row)

    def num_boxes(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def exponents(self, num_vars: int) -> tuple[int, ...]:
        exps = [0] * num_vars
        for row in self.cells:
            for box in row:
                for v in box:
                    exps[v - 1] += 1
        return tuple(exps)

    def column_word(self) -> Word:
        word: list[int] = []
        width = self.outer[0] if self.outer else 0
        for c in range(1, width + 1):
            for r in range(len(self.outer), 0, -1):
                box = self.get(r, c)
                if box is not None:
                    word.extend(box)
        return tuple(word)

    def to_json(self) -> dict:
        return {"outer": list(self.outer), "inner": list(self.inner),
                "cells": [[list(box) for box in row] for row in self.cells]}

    @classmethod
    def from_json(cls, data: dict) -> SetValuedTableau:
        return cls(tuple(data["outer"]), tuple(data.get("inner", ())),
                   tuple(tuple(tuple(box) for box in row) for row in data["cells"]))


def straight_setvalued(cells: Sequence[Sequence[Iterable[int]]]) -> SetValuedTableau:
    rows = tuple(tuple(tuple(box) for box in row) for row in cells if row)
    return SetValuedTableau(tuple(len(row) for row in rows), (), rows)


def format_setvalued(s: SetValuedTableau) -> str:
    def fmt(box):
        return "{" + ",".join(map(str, box)) + "}"
    if not s.outer:
        return "()"
    width = max(len(fmt(s.get(r, c))) for r, c in s.boxes()) if s.num_boxes() else 1
    lines = []
    for r in range(1, len(s.outer) + 1):
        pad = [" " * width] * s.inner_part(r)
        lines.append(" ".join(pad + [fmt(box).ljust(width) for box in s.cells[r - 1]]).rstrip())
    return "\n".join(lines)


def skew_shapes(max_rows: int, max_cols: int, max_boxes: int) -> Iterator[tuple[Partition, Partition]]:
    """All pairs inner ⊆ outer inside a max_rows x max_cols frame with at
    most max_boxes boxes in the difference."""
    def parts(rows, bound):
        if rows == 0:
            yield ()
            return
        for first in range(bound, -1, -1):
            for rest in parts(rows - 1, first):
                yield (first,) + rest

    frame = [partition(p) for p in parts(max_rows, max_cols)]
    for outer in frame:
        for inner in frame:
            if len(inner) <= len(outer) and all(a >= b for a, b in zip(outer, inner)):
                if sum(outer) - sum(inner) <= max_boxes:
                    yield outer, inner


def all_setvalued_tableaux(outer: Sequence[int], inner: Sequence[int], max_entry: int,
                           max_degree: int) -> Iterator[SetValuedTableau]:
    """Every set-valued tableau of shape outer/inner with entries at most
    max_entry and at most max_degree entries in total."""
    outer, inner = partition(outer), partition(inner)
    boxes = list(skew_boxes(outer, inner))
    subsets = {lo: [s for k in range(1, max_entry - lo + 2)
                    for s in combinations(range(lo, max_entry + 1), k)]
               for lo in range(1, max_entry + 2)}
    filling: dict[tuple[int, int], tuple[int, ...]] = {}

    def rec(idx: int, used: int):
        if idx == len(boxes):
            rows = [[] for _ in outer]
            for (r, c) in boxes:
                rows[r - 1].append(filling[(r, c)])
            yield SetValuedTableau(outer, inner, tuple(tuple(row) for row in rows))
            return
        r, c = boxes[idx]
        lo = 1
        if (r, c - 1) in filling:
            lo = max(lo, filling[(r, c - 1)][-1])
        if (r - 1, c) in filling:
            lo = max(lo, filling[(r - 1, c)][-1] + 1)
        remaining = len(boxes) - idx - 1
        for s in subsets.get(lo, []):
            if used + len(s) + remaining > max_degree:
                continue
            filling[(r, c)] = s
            yield from rec(idx + 1, used + len(s))
            del filling[(r, c)]

    if len(boxes) <= max_degree:
        yield from rec(0, 0)


def random_setvalued_tableau(rng: random.Random, outer: Sequence[int], inner: Sequence[int],
                             max_entry: int, max_set: int = 3) -> SetValuedTableau:
    outer, inner = partition(outer), partition(inner)
    while True:
        filling: dict[tuple[int, int], tuple[int, ...]] = {}
        ok = True
        for r in range(1, len(outer) + 1):
            start = (inner[r - 1] if r <= len(inner) else 0) + 1
            for c in range(start, outer[r - 1] + 1):
                lo = 1
                if (r, c - 1) in filling:
                    lo = max(lo, filling[(r, c - 1)][-1])
                if (r - 1, c) in filling:
                    lo = max(lo, filling[(r - 1, c)][-1] + 1)
                if lo > max_entry:
                    ok = False
                    break
                pool = list(range(lo, max_entry + 1))
                k = rng.randint(1, min(max_set, len(pool)))
                filling[(r, c)] = tuple(sorted(rng.sample(pool, k)))
            if not ok:
                break
        if ok:
            rows = [[filling[(r, c)] for c in range((inner[r - 1] if r <= len(inner) else 0) + 1,
                                                   outer[r - 1] + 1)]
                    for r in range(1, len(outer) + 1)]
            return SetValuedTableau(outer, inner, tuple(tuple(row) for row in rows))


# -- words -------------------------------------------------------------------

def is_reverse_lattice(word: Sequence[int]) -> bool:
    """Each i > 1 must be followed (strictly later) by more (i-1)'s than i's.

    >>> is_reverse_lattice([1, 2, 3, 1, 2, 3, 2, 1, 1])
    True
    >>> is_reverse_lattice([2])
    False
    """
    counts: dict[int, int] = {}
    for letter in reversed(word):
        if letter > 1 and counts.get(letter - 1, 0) <= counts.get(letter, 0):
            return False
        counts[letter] = counts.get(letter, 0) + 1
    return True


def content(word: Sequence[int]) -> tuple[int, ...]:
    if not word:
        return ()
    nu = [0] * max(word)
    for letter in word:
        nu[letter - 1] += 1
    return tuple(nu)


# -- the diagonal correspondence -----------------------------------------------

def diagonal_number(r: int, c: int, offset: int) -> int:
    """Diagonals are numbered right to left with box (1,1) on ``offset``."""
    return offset + r - c


def setvalued_to_diagram(s: SetValuedTableau, n: int, k: int) -> ColumnDiagram:
    """Column p of the diagram lists the diagonal numbers of boxes containing p."""
    offset = n - k
    cols: dict[int, list[int]] = {}
    for r, c in s.boxes():
        d = diagonal_number(r, c, offset)
        if d <= 0:
            raise ValueError(f"box ({r},{c}) has diagonal number {d} <= 0 for n-k={offset}")
        for p in s.get(r, c):
            cols.setdefault(p, []).append(d)
    width = max(cols, default=0)
    return tuple(tuple(sorted(cols.get(p, ()))) for p in range(1, width + 1))


def diagram_to_setvalued(d: ColumnDiagram, outer: Sequence[int], inner: Sequence[int],
                         n: int, k: int) -> SetValuedTableau:
    """Rebuild the set-valued tableau mapped to ``d``; raises if there is none."""
    outer, inner = partition(outer), partition(inner)
    offset = n - k
    by_diag: dict[int, list[tuple[int, int]]] = {}
    for r, c in skew_boxes(outer, inner):
        by_diag.setdefault(diagonal_number(r, c, offset), []).append((r, c))
    values: dict[int, list[int]] = {}
    for p, col in enumerate(d, start=1):
        for diag in col:
            if diag not in by_diag:
                raise ValueError(f"diagonal {diag} does not meet the shape")
            values.setdefault(diag, []).append(p)
    if set(values) != set(by_diag):
        raise ValueError("some box would be empty")

    # the entries along a diagonal increase strictly down the diagonal, so each
    # diagonal's sorted values split into consecutive nonempty runs, one per box
    def splits(vals, parts):
        if parts == 1:
            yield (tuple(vals),)
            return
        for cut in range(1, len(vals) - parts + 2):
            for rest in splits(vals[cut:], parts - 1):
                yield (tuple(vals[:cut]),) + rest

    diags = sorted(by_diag)
    solutions = []
    filling: dict[tuple[int, int], tuple[int, ...]] = {}

    def consistent(cells):
        for (r, c), box in cells:
            for (rr, cc), strict in (((r, c - 1), False), ((r, c + 1), False),
                                      ((r - 1, c), True), ((r + 1, c), True)):
                other = filling.get((rr, cc))
                if other is None:
                    continue
                lo, hi = (other, box) if (rr, cc) < (r, c) else (box, other)
                if strict and not lo[-1] < hi[0]:
                    return False
                if not strict and not lo[-1] <= hi[0]:
                    return False
        return True

    def rec(i):
        if i == len(diags):
            solutions.append(dict(filling))
            return
        cells = by_diag[diags[i]]
        vals = sorted(values[diags[i]])
        if len(vals) < len(cells):
            return
        for split in splits(vals, len(cells)):
            assignment = list(zip(cells, split))
            for cell, box in assignment:
                filling[cell] = box
            if consistent(assignment):
                rec(i + 1)
            for cell, _ in assignment:
                del filling[cell]

    rec(0)
    if len(solutions) != 1:
        raise ValueError(f"diagram has {len(solutions)} preimages")
    sol = solutions[0]
    rows = tuple(tuple(sol[(r, c)] for c in range((inner[r - 1] if r <= len(inner) else 0) + 1,
                                                   outer[r - 1] + 1))
                 for r in range(1, len(outer) + 1))
    return SetValuedTableau(outer, inner, rows)


def diagram_is_increasing(d: ColumnDiagram) -> bool:
    cols = list(d)
    while cols and not cols[-1]:
        cols.pop()
    if any(not col for col in cols):
        return False
    if any(len(cols[j]) < len(cols[j + 1]) for j in range(len(cols) - 1)):
        return False
    if any(col[r] >= col[r + 1] for col in cols for r in range(len(col) - 1)):
        return False
    return is_increasing(from_columns(cols))


def diagram_to_tableau(d: ColumnDiagram) -> Tableau:
    if not diagram_is_increasing(d):
        raise ValueError("diagram is not an increasing tableau")
    return from_columns(d)
