"""
Quiver coefficients from rank conditions on a sequence of bundle maps
E_0 -> E_1 -> ... -> E_n.

Rank conditions r_{ij} (0 <= i <= j <= n) give rectangular decreasing
tableaux U_{ij}, whose permutations W_{ij} multiply to the Zelevinsky
permutation z(r).  KMS-factorizations (pi_1, ..., pi_n) are the sequences
with ``z(r) = pi_1 . delta_1 . pi_2 ... delta_{n-1} . pi_n`` in the Hecke
monoid; factor sequences are sequences of decreasing tableaux representing
them, and counting factor sequences by shape gives the quiver coefficients.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Sequence

from .expansion import Expansion, decreasing_tableaux_for, stable_coefficients_decreasing
from .hecke import (Partition, Permutation, hecke_factorizations, hecke_product_all,
                    identity, in_symmetric_group, partition, symmetric_group)
from .insertion import product_chain, product_decreasing
from .tableaux import Tableau, all_decreasing_tableaux, shape
from .workers import parallel_map


@dataclass(frozen=True)
class RankConditions:
    """``rows[i]`` lists r_{i,i}, r_{i,i+1}, ..., r_{i,n}.

    Bundles of rank zero are allowed: the reduced conditions of a valid set
    can contain them.
    """
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows) - 1
        if n < 1:
            raise ValueError("rank conditions need at least two bundles")
        for i, row in enumerate(rows):
            if len(row) != n + 1 - i:
                raise ValueError(f"row {i} must have {n + 1 - i} entries, got {len(row)}")
        if any(v < 0 for row in rows for v in row):
            raise ValueError("ranks must be nonnegative")
        for i in range(n):
            for j in range(i + 1, n + 1):
                if self.r(i + 1, j) < self.r(i, j) or self.r(i, j - 1) < self.r(i, j):
                    raise ValueError(f"r[{i}][{j}] = {self.r(i, j)} exceeds a neighbouring rank")
        for i in range(n + 1):
            for j in range(i, n + 1):
                if self.strands(i, j) < 0:
                    raise ValueError(f"rank conditions cannot occur: {self.strands(i, j)} "
                                     f"strands from {i} to {j}")

    @property
    def n(self) -> int:
        return len(self.rows) - 1

    @property
    def e(self) -> tuple[int, ...]:
        return tuple(row[0] for row in self.rows)

    @property
    def N(self) -> int:
        return sum(self.e)

    def r(self, i: int, j: int) -> int:
        """r_{ij}, extended by r_{ij} = e_j + ... + e_i when j < i."""
        if not (0 <= i <= self.n and 0 <= j <= self.n):
            raise IndexError(f"rank index ({i}, {j}) out of range")
        if i <= j:
            return self.rows[i][j - i]
        return sum(self.e[j:i + 1])

    def strands(self, i: int, j: int) -> int:
        """Number of lace-diagram strands running from column i to column j.

        Ranks outside 0 <= i <= j <= n count as zero.
        """
        def rank(a, b):
            return self.r(a, b) if 0 <= a <= b <= self.n else 0
        return rank(i, j) - rank(i - 1, j) - rank(i, j + 1) + rank(i - 1, j + 1)

    def reduced(self) -> RankConditions:
        """The conditions r'_{ij} = r_{i,j+1} on the n-1 composed maps."""
        return RankConditions(tuple(row[1:] for row in self.rows[:-1]))

    def to_json(self) -> dict:
        return {"n": self.n, "rows": [list(row) for row in self.rows]}

    @classmethod
    def from_json(cls, data) -> RankConditions:
        if isinstance(data, str):
            data = json.loads(data)
        rc = cls(tuple(tuple(row) for row in data["rows"]))
        if "n" in data and data["n"] != rc.n:
            raise ValueError(f"n = {data['n']} does not match {len(data['rows'])} rows")
        return rc


def rank_conditions_from_strands(strands: dict[tuple[int, int], int], n: int) -> RankConditions:
    """Rank conditions of a lace diagram with ``strands[(i, j)]`` strands
    running from column i to column j; r_{ij} counts strands covering [i, j]."""
    rows = tuple(tuple(sum(c for (a, b), c in strands.items() if a <= i and b >= j)
                       for j in range(i, n + 1)) for i in range(n + 1))
    return RankConditions(rows)


def all_rank_conditions(n: int, max_rank: int) -> list[RankConditions]:
    """Every valid set of rank conditions for n maps with all e_i <= max_rank."""
    spans = [(i, j) for i in range(n + 1) for j in range(i, n + 1)]
    found = set()

    def rec(k, chosen, load):
        if k == len(spans):
            if all(0 < x for x in load):
                found.add(rank_conditions_from_strands(dict(zip(spans, chosen)), n))
            return
        i, j = spans[k]
        room = min(max_rank - load[c] for c in range(i, j + 1))
        for c in range(room + 1):
            new = list(load)
            for col in range(i, j + 1):
                new[col] += c
            rec(k + 1, chosen + [c], new)

    rec(0, [], [0] * (n + 1))
    return sorted(found, key=lambda rc: rc.rows)


def random_rank_conditions(rng, n: int, max_rank: int) -> RankConditions:
    """Rank conditions of a random lace diagram with every e_i in 1..max_rank."""
    while True:
        load = [0] * (n + 1)
        strands = {}
        for i in range(n + 1):
            for j in range(i, n + 1):
                room = min(max_rank - load[c] for c in range(i, j + 1))
                c = rng.randint(0, max(room, 0)) if rng.random() < 0.5 else 0
                strands[(i, j)] = c
                for col in range(i, j + 1):
                    load[col] += c
        if all(load):
            return rank_conditions_from_strands(strands, n)


def example_rank_conditions() -> RankConditions:
    """Bundles of ranks 1, 4, 3, 3 with r_01 = 1, r_12 = r_23 = 2, r_02 = r_13 = 1, r_03 = 0."""
    return RankConditions(((1, 1, 1, 0), (4, 2, 1), (3, 2), (3,)))


def expected_codim(rc: RankConditions) -> int:
    return sum((rc.r(i, j - 1) - rc.r(i, j)) * (rc.r(i + 1, j) - rc.r(i, j))
               for i in range(rc.n) for j in range(i + 1, rc.n + 1))


# -- rectangles and the Zelevinsky permutation -----------------------------------

def rectangle_tableau(r_left: int, r_below: int, r_corner: int) -> Tableau:
    """Decreasing tableau with r_below - r_corner rows and r_left - r_corner
    columns whose lower-left entry is r_left; entries grow by one per step up
    and shrink by one per step right.

    >>> rectangle_tableau(6, 5, 2)
    ((8, 7, 6, 5), (7, 6, 5, 4), (6, 5, 4, 3))
    """
    rows, cols = r_below - r_corner, r_left - r_corner
    if rows <= 0 or cols <= 0:
        return ()
    return tuple(tuple(r_left + (rows - a) - b for b in range(cols)) for a in range(1, rows + 1))


def rectangle_permutation(r_left: int, r_below: int, r_corner: int) -> Permutation:
    """Closed form of ``decreasing_permutation(rectangle_tableau(...))``: the
    block (r_corner, r_below] moves up by r_left - r_corner and the next
    r_left - r_corner values move down to fill the gap."""
    rows, cols = r_below - r_corner, r_left - r_corner
    if rows <= 0 or cols <= 0:
        return identity()
    top = r_below + cols

    def image(p):
        if r_corner < p <= r_below:
            return p + cols
        if r_below < p <= top:
            return p - rows
        return p
    return Permutation(tuple(image(p) for p in range(1, top + 1)))


def _check_rect_index(rc: RankConditions, i: int, j: int):
    if not (0 <= i < rc.n and 0 < j <= rc.n):
        raise IndexError(f"rectangle index ({i}, {j}) out of range for n = {rc.n}")


def build_u_tableau(rc: RankConditions, i: int, j: int) -> Tableau:
    _check_rect_index(rc, i, j)
    return rectangle_tableau(rc.r(i, j - 1), rc.r(i + 1, j), rc.r(i, j))


def w_ij(rc: RankConditions, i: int, j: int) -> Permutation:
    _check_rect_index(rc, i, j)
    return rectangle_permutation(rc.r(i, j - 1), rc.r(i + 1, j), rc.r(i, j))


def _factors(rc: RankConditions) -> list[Permutation]:
    return [w_ij(rc, i, j) for j in range(1, rc.n + 1) for i in range(rc.n)]


def zelevinsky(rc: RankConditions) -> Permutation:
    """z(r): the product of the W_{ij}, j = 1..n outer and i = 0..n-1 inner.

    The ordinary product is checked to equal the Hecke product (so the
    factorization is reduced), along with the descent containments of z(r)
    and its inverse.
    """
    return _zelevinsky(rc)


@lru_cache(maxsize=None)
def _zelevinsky(rc: RankConditions) -> Permutation:
    factors = _factors(rc)
    z = identity()
    for w in factors:
        z = z * w
    if z != hecke_product_all(factors):
        raise AssertionError("the product of the W_ij is not reduced")
    if z.length() != sum(w.length() for w in factors):
        raise AssertionError("length of z(r) differs from the number of boxes")
    n = rc.n
    if not z.descents() <= {rc.r(n, j) for j in range(1, n + 1)}:
        raise AssertionError(f"descents of {z} not among the ranks r_nj")
    if not z.inverse().descents() <= {rc.r(i, 0) for i in range(n)}:
        raise AssertionError(f"inverse descents of {z} not among the ranks r_i0")
    return z


def deltas(rc: RankConditions) -> tuple[Permutation, ...]:
    """delta_j = W_jj W_{j+1,j} ... W_{n-1,j} for j = 1..n-1."""
    out = []
    for j in range(1, rc.n):
        d = identity()
        for i in range(j, rc.n):
            d = d * w_ij(rc, i, j)
        out.append(d)
    return tuple(out)


# -- KMS-factorizations ----------------------------------------------------------

def is_kms_factorization(rc: RankConditions, perms: Sequence[Permutation]) -> bool:
    if len(perms) != rc.n:
        return False
    e = rc.e
    if not all(in_symmetric_group(p, e[i] + e[i + 1]) for i, p in enumerate(perms)):
        return False
    chain: list[Permutation] = [perms[0]]
    for d, p in zip(deltas(rc), perms[1:]):
        chain += [d, p]
    return hecke_product_all(chain) == zelevinsky(rc)


def kms_factorizations(rc: RankConditions) -> list[tuple[Permutation, ...]]:
    """All KMS-factorizations, built recursively from those of the reduced
    conditions: each factor tau_i there splits as sigma_i . rho_i with
    sigma_i, rho_i in S_{e_i}, and these pieces are glued onto the W_{i-1,i}.
    """
    return list(_kms(rc))


def _kms_key(perms):
    return tuple(p.oneline for p in perms)


@lru_cache(maxsize=None)
def _kms(rc: RankConditions) -> tuple[tuple[Permutation, ...], ...]:
    n, e = rc.n, rc.e
    diagonal = [w_ij(rc, i - 1, i) for i in range(1, n + 1)]
    found: set[tuple[Permutation, ...]] = set()
    if n == 1:
        found.add((diagonal[0],))
    else:
        for taus in _kms(rc.reduced()):
            splits = []
            for i, tau in enumerate(taus, start=1):
                splits.append([(s, r) for s, r in hecke_factorizations(tau)
                               if in_symmetric_group(s, e[i]) and in_symmetric_group(r, e[i])])
            for choice in product(*splits):
                perms = []
                for i in range(1, n + 1):
                    left = [choice[i - 2][1]] if i > 1 else []
                    right = [choice[i - 1][0]] if i < n else []
                    perms.append(hecke_product_all(left + [diagonal[i - 1]] + right))
                found.add(tuple(perms))
    for perms in found:
        if not is_kms_factorization(rc, perms):
            raise AssertionError(f"recursion produced a non-factorization {perms}")
    return tuple(sorted(found, key=_kms_key))


def kms_factorizations_brute_force(rc: RankConditions) -> list[tuple[Permutation, ...]]:
    """Every sequence in the product of S_{e_{i-1}+e_i} satisfying the definition."""
    e = rc.e
    groups = [list(symmetric_group(e[i] + e[i + 1])) for i in range(rc.n)]
    found = [perms for perms in product(*groups) if is_kms_factorization(rc, perms)]
    return sorted(found, key=_kms_key)


# -- factor sequences ---------------------------------------------------------------

def _sequence_key(seq):
    shapes = tuple(shape(t) for t in seq)
    return (sum(sum(s) for s in shapes), shapes, seq)


def _tableaux_for_factorization(job) -> list[tuple[Tableau, ...]]:
    perms, e = job
    choices = [decreasing_tableaux_for(p, max_rows=e[i + 1], max_cols=e[i])
               for i, p in enumerate(perms)]
    return [tuple(seq) for seq in product(*choices)]


def factor_sequences(rc: RankConditions) -> list[tuple[Tableau, ...]]:
    """Sequences (T_1, ..., T_n) of decreasing tableaux with T_i inside the
    e_i x e_{i-1} rectangle whose permutations form a KMS-factorization."""
    jobs = [(perms, rc.e) for perms in kms_factorizations(rc)]
    found = {seq for batch in parallel_map(_tableaux_for_factorization, jobs) for seq in batch}
    return sorted(found, key=_sequence_key)


def factor_sequences_by_splitting(rc: RankConditions) -> list[tuple[Tableau, ...]]:
    """Factor sequences from the recursive definition: given a factor
    sequence (C_1, ..., C_{n-1}) for the reduced conditions, every way of
    writing C_i = A_i . B_i with decreasing tableaux whose entries are below
    e_i yields (U_01 . A_1, B_1 . U_12 . A_2, ..., B_{n-1} . U_{n-1,n}).

    Exponential; meant for cross-checking on small inputs.
    """
    return sorted(_by_splitting(rc), key=_sequence_key)


@lru_cache(maxsize=None)
def _decreasing_below(bound: int) -> tuple[Tableau, ...]:
    return tuple(all_decreasing_tableaux(bound - 1))


@lru_cache(maxsize=None)
def _by_splitting(rc: RankConditions) -> frozenset[tuple[Tableau, ...]]:
    n, e = rc.n, rc.e
    units = [build_u_tableau(rc, i - 1, i) for i in range(1, n + 1)]
    if n == 1:
        return frozenset({(units[0],)})
    found = set()
    for seq in _by_splitting(rc.reduced()):
        pairs = []
        for i, c in enumerate(seq, start=1):
            pool = _decreasing_below(e[i])
            pairs.append([(a, b) for a in pool for b in pool if product_decreasing(a, b) == c])
        for choice in product(*pairs):
            out = []
            for i in range(1, n + 1):
                parts = ([choice[i - 2][1]] if i > 1 else []) + [units[i - 1]] \
                    + ([choice[i - 1][0]] if i < n else [])
                out.append(product_chain(parts, decreasing=True))
            found.add(tuple(out))
    return frozenset(found)


def quiver_coefficients(rc: RankConditions) -> Expansion:
    """c_mu(r), keyed by shape sequences mu = (mu_1, ..., mu_n)."""
    d = expected_codim(rc)
    result = Expansion()
    for seq in factor_sequences(rc):
        mu = tuple(shape(t) for t in seq)
        result.add(mu, -1 if (sum(map(sum, mu)) - d) % 2 else 1)
    return result


# -- comparison with the Zelevinsky permutation ---------------------------------

def lambda_of_mu(mu: Sequence[Sequence[int]], e: Sequence[int]) -> Partition:
    """Concatenate (e_0 + ... + e_{i-2})^{e_i} + mu_i for i = n, ..., 1.

    >>> lambda_of_mu([(1,), (3,), (1,)], (1, 4, 3, 3))
    (6, 5, 5, 4, 1, 1, 1)
    """
    n = len(e) - 1
    if len(mu) != n:
        raise ValueError(f"expected {n} partitions, got {len(mu)}")
    parts: list[int] = []
    for i in range(n, 0, -1):
        m = partition(mu[i - 1])
        if len(m) > e[i] or (m and m[0] > e[i - 1]):
            raise ValueError(f"mu_{i} = {m} does not fit in a {e[i]} x {e[i - 1]} rectangle")
        base = sum(e[:i - 1])
        parts += [base + (m[k] if k < len(m) else 0) for k in range(e[i])]
    return partition(parts)


def _count_shape(job) -> int:
    z, lam = job
    return len(decreasing_tableaux_for(z, shape=lam))


def verify_quivstab(rc: RankConditions, shapes: Sequence[Sequence[Sequence[int]]] | None = None,
                    full: bool = False) -> dict:
    """Compare c_mu(r) with c_{z(r), lambda(mu)}, the latter by enumerating
    decreasing tableaux of shape lambda(mu) representing z(r).

    ``shapes`` restricts the comparison to the given mu; by default every mu
    occurring in the quiver expansion is checked.  With ``full`` the whole
    expansion of G_{z(r)} is computed as well and compared with the quiver
    expansion relabelled by mu -> lambda(mu).  Mismatches are reported, not
    raised.
    """
    z = zelevinsky(rc)
    quiver = quiver_coefficients(rc)
    if shapes is None:
        mus = [mu for mu, _ in quiver.sorted_items()]
    else:
        mus = [tuple(partition(m) for m in mu) for mu in shapes]
    lams = [lambda_of_mu(mu, rc.e) for mu in mus]
    counts = parallel_map(_count_shape, [(z, lam) for lam in lams])
    rows = []
    base = z.length()
    for mu, lam, count in zip(mus, lams, counts):
        stable = -count if (sum(lam) - base) % 2 else count
        q = quiver.get(mu, 0)
        rows.append({"mu": [list(m) for m in mu], "lambda": list(lam),
                     "quiver": q, "stable": stable, "match": q == stable})
    sequences = sum(abs(c) for c in quiver.values())
    tableaux = sum(counts)
    report = {
        "zelevinsky": list(z.oneline),
        "terms": rows,
        "factor_sequences": sequences,
        "tableaux_at_shapes": tableaux,
        "ok": all(row["match"] for row in rows),
    }
    if full:
        # every decreasing tableau for z(r) should come from a factor sequence
        everything = stable_coefficients_decreasing(z)
        mapped = {lambda_of_mu(mu, rc.e): c for mu, c in quiver.items()}
        report["tableaux_total"] = sum(abs(c) for c in everything.values())
        report["full_match"] = dict(everything) == mapped
        report["ok"] = report["ok"] and report["full_match"] and tableaux == sequences
    return report
