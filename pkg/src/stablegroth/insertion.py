"""
Hecke column insertion, its reverse, and the tableau products built on it.

Inserting x into an increasing tableau Y returns ``(Z, corner, alpha)``;
alpha is 1 exactly when the corner is a new box.  Reverse insertion inverts
this, and inserting a compatible pair letter by letter while recording the
index letters in a set-valued tableau gives the pair ``(T, U)``.

>>> hecke_insert(2, ((1, 2), (2, 5), (4,)))
InsertionResult(tableau=((1, 2, 5), (2, 4), (4,)), corner=(1, 3), alpha=1)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .hecke import Word
from .tableaux import (SetValuedTableau, Tableau, column_word, complement, is_increasing,
                       straight_setvalued, tableau)


class InsertionResult(NamedTuple):
    tableau: Tableau
    corner: tuple[int, int]
    alpha: int


@dataclass(frozen=True)
class CompatiblePair:
    """Words (a, i) of equal length, i weakly increasing, a strictly
    decreasing on each run of equal i."""
    a: Word
    i: Word

    def __post_init__(self):
        a, i = tuple(self.a), tuple(self.i)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "i", i)
        if len(a) != len(i):
            raise ValueError("a and i must have the same length")
        if any(x < 1 for x in a + i):
            raise ValueError("letters must be positive")
        for j in range(len(a) - 1):
            if i[j] > i[j + 1]:
                raise ValueError(f"i is not weakly increasing at position {j + 1}")
            if i[j] == i[j + 1] and not a[j] > a[j + 1]:
                raise ValueError(f"a must decrease where i is constant (position {j + 1})")

    def exponents(self, num_vars: int) -> tuple[int, ...]:
        exps = [0] * num_vars
        for v in self.i:
            exps[v - 1] += 1
        return tuple(exps)


@dataclass(frozen=True)
class RecordingPair:
    t: Tableau
    u: SetValuedTableau
    trace: tuple = field(default=(), compare=False, repr=False)


def _column(rows: list[list[int]], col: int) -> list[int]:
    return [row[col] for row in rows if len(row) > col]


def hecke_insert(x: int, y: Tableau, steps: list | None = None) -> InsertionResult:
    """Hecke column insertion of the letter ``x`` into ``y``.

    If ``steps`` is a list, one dict per visited column is appended to it,
    recording the value inserted there and what happened.
    """
    if x < 1:
        raise ValueError(f"can only insert positive integers, got {x}")
    rows = [list(row) for row in y]
    col = 0
    while True:
        column = _column(rows, col)
        if not column or x >= column[-1]:
            r = len(column)
            if column and x == column[-1]:
                fits = False
            elif col == 0:
                fits = True
            else:
                fits = r < len(rows) and len(rows[r]) == col and rows[r][col - 1] < x
            if fits:
                if r == len(rows):
                    rows.append([])
                rows[r].append(x)
                if steps is not None:
                    steps.append({"column": col + 1, "value": x, "action": "adjoin"})
                return InsertionResult(tableau(rows), (r + 1, col + 1), 1)
            if not column:
                raise AssertionError(f"insertion of {x} stalled at an empty column {col + 1}")
            r = len(column) - 1
            if steps is not None:
                steps.append({"column": col + 1, "value": x, "action": "absorb"})
            return InsertionResult(tableau(rows), (r + 1, len(rows[r])), 0)

        r = next(k for k, v in enumerate(column) if v > x)
        bumped = column[r]
        legal = ((r == 0 or column[r - 1] < x)
                 and (col == 0 or rows[r][col - 1] < x)
                 and (col + 1 >= len(rows[r]) or rows[r][col + 1] > x))
        if legal:
            rows[r][col] = x
        if steps is not None:
            steps.append({"column": col + 1, "value": x, "bumped": bumped,
                          "action": "replace" if legal else "keep"})
        x = bumped
        col += 1


def _is_corner(rows: Sequence[Sequence[int]], r: int, c: int) -> bool:
    return (0 <= r < len(rows) and c == len(rows[r]) - 1
            and (r + 1 == len(rows) or len(rows[r + 1]) <= c))


def reverse_hecke_insert(result: InsertionResult | tuple) -> tuple[Tableau, int]:
    """Undo :func:`hecke_insert`, returning ``(Y, x)``."""
    z, corner, alpha = result
    if alpha not in (0, 1):
        raise ValueError(f"alpha must be 0 or 1, got {alpha}")
    rows = [list(row) for row in z]
    r, col = corner[0] - 1, corner[1] - 1
    if not _is_corner(rows, r, col):
        raise ValueError(f"{tuple(corner)} is not a corner of the tableau")
    y = rows[r][col]
    if alpha:
        rows[r].pop()
    col -= 1
    while col >= 0:
        column = _column(rows, col)
        smaller = [k for k, v in enumerate(column) if v < y]
        if not smaller:
            raise ValueError(f"reverse insertion of {y} found no smaller entry in column {col + 1}")
        k = smaller[-1]
        x = column[k]
        legal = ((k + 1 >= len(column) or column[k + 1] > y)
                 and (col == 0 or rows[k][col - 1] < y)
                 and (col + 1 >= len(rows[k]) or rows[k][col + 1] > y))
        if legal:
            rows[k][col] = y
        y = x
        col -= 1
    return tableau(rows), y


def insert_word(word: Sequence[int], t: Tableau = ()) -> Tableau:
    for letter in word:
        t = hecke_insert(letter, t).tableau
    return t


def insert_compatible_pair(pair: CompatiblePair, trace: bool = False) -> RecordingPair:
    """Insert ``pair.a`` letter by letter, recording ``pair.i`` in a set-valued tableau."""
    t: Tableau = ()
    u: list[list[set[int]]] = []
    steps = []
    for letter, index in zip(pair.a, pair.i):
        t, (r, c), alpha = hecke_insert(letter, t)
        if alpha:
            if r > len(u):
                u.append([])
            u[r - 1].append({index})
        else:
            u[r - 1][c - 1].add(index)
        if trace:
            snapshot = straight_setvalued([[sorted(box) for box in row] for row in u])
            steps.append({"letter": letter, "index": index, "alpha": alpha,
                          "corner": (r, c), "T": t, "U": snapshot})
    return RecordingPair(t, straight_setvalued([[sorted(box) for box in row] for row in u]),
                         tuple(steps))


def recover_compatible_pair(t: Tableau, u: SetValuedTableau) -> CompatiblePair:
    """Inverse of :func:`insert_compatible_pair`."""
    if tuple(len(row) for row in t) != u.outer or u.inner:
        raise ValueError("T and U must have the same straight shape")
    if not is_increasing(t) and t:
        raise ValueError("T is not increasing")
    cells = [[list(box) for box in row] for row in u.cells]
    a: list[int] = []
    i: list[int] = []
    while cells:
        top = max(v for row in cells for box in row for v in box)
        # boxes holding the largest value lie in distinct columns; take the rightmost
        r, c = max(((r, c) for r, row in enumerate(cells) for c, box in enumerate(row)
                    if top in box), key=lambda rc: rc[1])
        if not _is_corner(cells, r, c):
            raise ValueError("largest entry of U is not in a corner")
        if len(cells[r][c]) == 1:
            alpha = 1
            cells[r].pop()
            if not cells[r]:
                cells.pop()
        else:
            alpha = 0
            cells[r][c].remove(top)
        t, letter = reverse_hecke_insert((t, (r + 1, c + 1), alpha))
        a.append(letter)
        i.append(top)
    return CompatiblePair(tuple(reversed(a)), tuple(reversed(i)))


def product_increasing(t1: Tableau, t2: Tableau) -> Tableau:
    """``t1 . t2``: Hecke insert the column word of t1, last letter first, into t2."""
    for letter in reversed(column_word(t1)):
        t2 = hecke_insert(letter, t2).tableau
    return t2


def product_decreasing(t1: Tableau, t2: Tableau) -> Tableau:
    """The product of decreasing tableaux, computed with the order reversed."""
    top = max((x for t in (t1, t2) for row in t for x in row), default=0) + 1
    return complement(product_increasing(complement(t1, top), complement(t2, top)), top)


def product_chain(tableaux: Sequence[Tableau], decreasing: bool = False) -> Tableau:
    """``T1 . (T2 . ( ... . Tk))``."""
    mult = product_decreasing if decreasing else product_increasing
    if not tableaux:
        return ()
    result = tableaux[-1]
    for t in reversed(tableaux[:-1]):
        result = mult(t, result)
    return result
