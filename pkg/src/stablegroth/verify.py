"""
Self-checks behind the ``verify`` command: randomized insertion round trips,
exhaustive oracle comparisons over a symmetric group, and the quiver
pipeline on the worked example.

Each check reports how many cases it examined and the first counterexample,
if any.  Reports contain no timings, so they are reproducible byte for byte.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Callable

from .expansion import (combine_setvalued, increasing_tableaux_brute_force,
                        increasing_tableaux_for, max_tableau, monomials_compatible,
                        stable_coefficients, stable_coefficients_decreasing)
from .hecke import Permutation, conjugate_by_longest, reduce_word, symmetric_group
from .insertion import (CompatiblePair, hecke_insert, insert_compatible_pair,
                        product_increasing, recover_compatible_pair, reverse_hecke_insert)
from .quiver import (RankConditions, build_u_tableau, example_rank_conditions, expected_codim,
                     factor_sequences, factor_sequences_by_splitting, kms_factorizations, quiver_coefficients,
                     random_rank_conditions, verify_quivstab, zelevinsky)
from .tableaux import (Tableau, column_word, columns, contains_at_upper_left,
                       decreasing_permutation, dominates, from_columns, random_increasing_tableau,
                       shape, size, tableau)

SUITES = ("roundtrip", "oracles", "quiver", "all")

# Coefficients of the rank conditions in ``example_rank_conditions``.
EXAMPLE_QUIVER_EXPANSION = {
    ((1,), (3,), (1,)): 1, ((1,), (2,), (1, 1)): 1, ((), (3, 1), (1,)): 1,
    ((), (2, 1), (1, 1)): 1, ((), (3,), (1, 1)): 1, ((), (2,), (1, 1, 1)): 1,
    ((1,), (3, 1), (1,)): -1, ((1,), (2, 1), (1, 1)): -1, ((1,), (3,), (1, 1)): -2,
    ((), (3, 1), (1, 1)): -2, ((), (3,), (1, 1, 1)): -1, ((1,), (2,), (1, 1, 1)): -1,
    ((), (2, 1), (1, 1, 1)): -1, ((1,), (3, 1), (1, 1)): 2, ((1,), (3,), (1, 1, 1)): 1,
    ((), (3, 1), (1, 1, 1)): 1, ((1,), (2, 1), (1, 1, 1)): 1, ((1,), (3, 1), (1, 1, 1)): -1,
}
EXAMPLE_ZELEVINSKY = (2, 6, 9, 1, 10, 11, 3, 4, 7, 8, 5)

_E = ()
_A, _B, _C = ((1,),), ((4, 3, 2),), ((4, 3),)
_D, _F, _G, _H = ((4, 3, 2), (1,)), ((4, 3), (1,)), ((4, 3, 1),), ((4, 3, 1), (1,))
_X, _Y, _Z = ((3,),), ((3,), (2,)), ((3,), (2,), (1,))
# The 21 factor sequences of ``example_rank_conditions``.
EXAMPLE_FACTOR_SEQUENCES = frozenset({
    (_A, _B, _X), (_A, _C, _Y), (_E, _D, _X), (_E, _F, _Y), (_E, _G, _Y), (_E, _C, _Z),
    (_A, _D, _X), (_A, _F, _Y), (_A, _B, _Y), (_A, _G, _Y), (_E, _D, _Y), (_E, _H, _Y),
    (_E, _G, _Z), (_A, _C, _Z), (_E, _F, _Z), (_A, _D, _Y), (_A, _H, _Y), (_A, _G, _Z),
    (_E, _H, _Z), (_A, _F, _Z), (_A, _H, _Z),
})


def _jsonable(x):
    if isinstance(x, Permutation):
        return list(x.oneline)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (tuple, list)):
        return [_jsonable(v) for v in x]
    return x


@dataclass
class Check:
    name: str
    cases: int = 0
    counterexample: Any = None

    def fail(self, **payload):
        if self.counterexample is None:
            self.counterexample = _jsonable(payload)

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def to_json(self) -> dict:
        out = {"name": self.name, "ok": self.ok, "cases": self.cases}
        if not self.ok:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {"suite": self.suite, "ok": self.ok, "checks": [c.to_json() for c in self.checks]}


# -- random inputs ------------------------------------------------------------------

def random_compatible_pair(rng: random.Random, max_length: int = 10, max_letter: int = 8,
                           max_index: int = 5) -> CompatiblePair:
    """Random (a, i): i weakly increasing, a decreasing on runs of equal i."""
    a: list[int] = []
    i: list[int] = []
    remaining = rng.randint(0, max_length)
    for index in range(1, max_index + 1):
        if remaining <= 0:
            break
        k = rng.randint(0, min(remaining, max_letter))
        a += sorted(rng.sample(range(1, max_letter + 1), k), reverse=True)
        i += [index] * k
        remaining -= k
    return CompatiblePair(tuple(a), tuple(i))


def _corners(t: Tableau) -> list[tuple[int, int]]:
    return [(r + 1, len(t[r])) for r in range(len(t))
            if r + 1 == len(t) or len(t[r + 1]) < len(t[r])]


# -- roundtrip suite -------------------------------------------------------------

def roundtrip_checks(count: int, seed: int = 0, max_boxes: int = 12,
                     max_letter: int = 8) -> list[Check]:
    rng = random.Random(seed)
    forward = Check("insert_then_reverse")
    backward = Check("reverse_then_insert")
    word = Check("insertion_preserves_hecke_word")
    pieri = Check("pieri_property")
    cuts = Check("cut_products")
    pairs = Check("recording_pair_roundtrip")
    for _ in range(count):
        y = random_increasing_tableau(rng, max_boxes, max_letter)
        x1, x2 = rng.randint(1, max_letter), rng.randint(1, max_letter)
        z, c1, a1 = hecke_insert(x1, y)
        forward.cases += 1
        if reverse_hecke_insert((z, c1, a1)) != (y, x1):
            forward.fail(tableau=y, letter=x1)
        word.cases += 1
        if reduce_word(column_word(z)) != reduce_word((x1,) + column_word(y)):
            word.fail(tableau=y, letter=x1)
        _, c2, _ = hecke_insert(x2, z)
        pieri.cases += 1
        if (c2[1] > c1[1]) != (x1 > x2):
            pieri.fail(tableau=y, x1=x1, x2=x2, c1=c1, c2=c2)
        if y:
            corner = rng.choice(_corners(y))
            alpha = rng.randint(0, 1)
            backward.cases += 1
            try:
                ok = hecke_insert(*reversed(reverse_hecke_insert((y, corner, alpha)))) \
                    == (y, corner, alpha)
            except ValueError:
                ok = False
            if not ok:
                backward.fail(tableau=y, corner=corner, alpha=alpha)
            cols = columns(y)
            k = rng.randint(0, len(cols))
            r = rng.randint(0, len(y))
            cuts.cases += 1
            if (product_increasing(from_columns(cols[:k]), from_columns(cols[k:])) != y
                    or product_increasing(tableau(y[r:]), tableau(y[:r])) != y):
                cuts.fail(tableau=y, column_cut=k, row_cut=r)
        pair = random_compatible_pair(rng, max_letter=max_letter)
        pairs.cases += 1
        rec = insert_compatible_pair(pair, trace=True)
        if (recover_compatible_pair(rec.t, rec.u) != pair
                or not all(step["U"].is_valid() for step in rec.trace)):
            pairs.fail(a=pair.a, i=pair.i)
    return [forward, backward, word, pieri, cuts, pairs]


# -- oracles suite -------------------------------------------------------------------

def oracle_checks(n: int = 4, num_vars: int = 3) -> list[Check]:
    monomial = Check("compatible_pairs_equal_setvalued_sum")
    decreasing = Check("increasing_equals_decreasing")
    conjugation = Check("conjugation_symmetry")
    pruning = Check("pruned_equals_unpruned_and_brute_force")
    dominance = Check("max_tableau_first_column")
    lowest = Check("lowest_degree_extremes")
    symmetric = Check("monomials_symmetric")
    for p in symmetric_group(n):
        ell = p.length()
        exp = stable_coefficients(p)
        monomial.cases += 1
        lhs = monomials_compatible(p, num_vars, ell + 2)
        rhs = combine_setvalued(exp, num_vars, ell + 2)
        if lhs != rhs:
            monomial.fail(perm=p, compatible=lhs.to_json(), setvalued=rhs.to_json())
        symmetric.cases += 1
        for i in range(1, num_vars):
            if lhs.swap(i) != lhs:
                symmetric.fail(perm=p, swap=i)
        decreasing.cases += 1
        if stable_coefficients_decreasing(p) != exp:
            decreasing.fail(perm=p)
        conjugation.cases += 1
        if stable_coefficients(conjugate_by_longest(p.inverse(), n)) != exp:
            conjugation.fail(perm=p)
        pruning.cases += 1
        cap = ell + 2
        a = increasing_tableaux_for(p, max_boxes=cap)
        if a != increasing_tableaux_for(p, max_boxes=cap, prune=False) \
                or a != increasing_tableaux_brute_force(p, cap):
            pruning.fail(perm=p, max_boxes=cap)
        m = max_tableau(p)
        for t in increasing_tableaux_for(p):
            dominance.cases += 1
            for r, row in enumerate(t):
                if r < len(m) and m[r][0] < row[0]:
                    dominance.fail(perm=p, tableau=t, max_tableau=m)
        lowest.cases += 1
        bottom = [lam for lam in exp if sum(lam) == ell]
        top = [lam for lam in bottom if not any(mu != lam and dominates(mu, lam) for mu in bottom)]
        low = [lam for lam in bottom if not any(mu != lam and dominates(lam, mu) for mu in bottom)]
        if (len(top) != 1 or len(low) != 1 or exp[top[0]] != 1 or exp[low[0]] != 1
                or shape(max_tableau(p.inverse())) != top[0]):
            lowest.fail(perm=p, lowest_layer=[list(lam) for lam in bottom])
    return [monomial, symmetric, decreasing, conjugation, pruning, dominance, lowest]


# -- quiver suite ----------------------------------------------------------------------

def quiver_checks(rc: RankConditions | None = None, random_cases: int = 0,
                  seed: int = 0) -> list[Check]:
    """Golden values for the worked example, plus structural checks on it and
    on ``random_cases`` random rank conditions."""
    checks = []
    if rc is None:
        rc = example_rank_conditions()
        golden = Check("example_golden_values")
        golden.cases = 1
        found = {
            "codim": expected_codim(rc),
            "zelevinsky": zelevinsky(rc).oneline,
            "kms": len(kms_factorizations(rc)),
            "factor_sequences": len(factor_sequences(rc)),
        }
        want = {"codim": 5, "zelevinsky": EXAMPLE_ZELEVINSKY, "kms": 13, "factor_sequences": 21}
        if found != want:
            golden.fail(found=found, expected=want)
        if set(factor_sequences(rc)) != EXAMPLE_FACTOR_SEQUENCES:
            golden.fail(factor_sequences=factor_sequences(rc))
        if dict(quiver_coefficients(rc)) != EXAMPLE_QUIVER_EXPANSION:
            golden.fail(expansion=quiver_coefficients(rc).to_json())
        checks.append(golden)
    structure = Check("factor_sequence_structure")
    splitting = Check("splitting_definition_agrees")
    quivstab = Check("quiver_equals_zelevinsky_coefficients")
    rng = random.Random(seed)
    cases = [rc] + [random_rank_conditions(rng, 3, 3) for _ in range(random_cases)]
    for cond in cases:
        structure.cases += 1
        problem = _structure_problem(cond)
        if problem:
            structure.fail(ranks=cond.to_json(), problem=problem)
        if cond.n <= 3:
            splitting.cases += 1
            if factor_sequences(cond) != factor_sequences_by_splitting(cond):
                splitting.fail(ranks=cond.to_json())
        quivstab.cases += 1
        report = verify_quivstab(cond, full=True)
        if not report["ok"]:
            quivstab.fail(ranks=cond.to_json(), report=report)
    return checks + [structure, splitting, quivstab]


def _structure_problem(rc: RankConditions) -> str | None:
    kms = set(kms_factorizations(rc))
    seqs = factor_sequences(rc)
    hit = set()
    d = expected_codim(rc)
    degrees = []
    for seq in seqs:
        perms = tuple(decreasing_permutation(t) for t in seq)
        if perms not in kms:
            return f"sequence {seq} does not give a KMS-factorization"
        hit.add(perms)
        for i, t in enumerate(seq, start=1):
            if not contains_at_upper_left(t, build_u_tableau(rc, i - 1, i)):
                return f"T_{i} of {seq} does not contain U_{i - 1},{i}"
        degrees.append(sum(size(t) for t in seq))
    if hit != kms:
        return "some KMS-factorization has no factor sequence"
    if min(degrees) != d:
        return f"lowest degree {min(degrees)} differs from the codimension {d}"
    return None


# -- entry point ----------------------------------------------------------------------

def verify(suite: str, size: int | None = None, seed: int = 0) -> Report:
    """Run a suite.  ``size`` means: number of random cases (roundtrip),
    the symmetric group S_size (oracles), or extra random rank conditions
    (quiver)."""
    runners: dict[str, Callable[[], list[Check]]] = {
        "roundtrip": lambda: roundtrip_checks(1000 if size is None else size, seed),
        "oracles": lambda: oracle_checks(4 if size is None else size),
        "quiver": lambda: quiver_checks(random_cases=0 if size is None else size, seed=seed),
    }
    if suite == "all":
        checks = [c for name in ("roundtrip", "oracles", "quiver") for c in runners[name]()]
    elif suite in runners:
        checks = runners[suite]()
    else:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    return Report(suite, checks)
