"""
Sparse multivariate polynomials with integer coefficients, truncated by degree.

Exponent vectors are dense tuples of a fixed width ``num_vars``.
"""

from __future__ import annotations

from typing import Iterable, Mapping

Exponents = tuple[int, ...]


class SparsePolynomial:
    """A polynomial in x_1..x_num_vars keeping only terms of degree <= max_degree.

    ``max_degree=None`` means no truncation.
    """

    __slots__ = ("num_vars", "max_degree", "terms")

    def __init__(self, num_vars: int, terms: Mapping[Exponents, int] | Iterable = (),
                 max_degree: int | None = None):
        self.num_vars = num_vars
        self.max_degree = max_degree
        self.terms: dict[Exponents, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, coeff in items:
            self._add(tuple(exps), coeff)

    def _add(self, exps: Exponents, coeff: int):
        if len(exps) != self.num_vars:
            raise ValueError(f"exponent vector {exps} does not have {self.num_vars} entries")
        if self.max_degree is not None and sum(exps) > self.max_degree:
            return
        total = self.terms.get(exps, 0) + coeff
        if total:
            self.terms[exps] = total
        else:
            self.terms.pop(exps, None)

    @classmethod
    def constant(cls, c: int, num_vars: int, max_degree: int | None = None) -> SparsePolynomial:
        return cls(num_vars, {(0,) * num_vars: c}, max_degree)

    @classmethod
    def variable(cls, i: int, num_vars: int, max_degree: int | None = None) -> SparsePolynomial:
        exps = [0] * num_vars
        exps[i - 1] = 1
        return cls(num_vars, {tuple(exps): 1}, max_degree)

    def copy(self) -> SparsePolynomial:
        return SparsePolynomial(self.num_vars, dict(self.terms), self.max_degree)

    def _bound(self, other: SparsePolynomial) -> int | None:
        if self.max_degree is None:
            return other.max_degree
        if other.max_degree is None:
            return self.max_degree
        return min(self.max_degree, other.max_degree)

    def __add__(self, other: SparsePolynomial) -> SparsePolynomial:
        result = SparsePolynomial(self.num_vars, self.terms, self._bound(other))
        for exps, coeff in other.terms.items():
            result._add(exps, coeff)
        return result

    def __neg__(self) -> SparsePolynomial:
        return SparsePolynomial(self.num_vars, {e: -c for e, c in self.terms.items()},
                                self.max_degree)

    def __sub__(self, other: SparsePolynomial) -> SparsePolynomial:
        return self + (-other)

    def __mul__(self, other) -> SparsePolynomial:
        if isinstance(other, int):
            return SparsePolynomial(self.num_vars, {e: c * other for e, c in self.terms.items()},
                                    self.max_degree)
        result = SparsePolynomial(self.num_vars, (), self._bound(other))
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                result._add(tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
        return result

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"SparsePolynomial({self.num_vars}, {self.sorted_terms()!r})"

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[Exponents, int]]:
        """Terms by increasing degree; within a degree, lexicographically
        largest exponent vector first (x1 before x2)."""
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), [-a for a in item[0]]))

    def truncate(self, max_degree: int) -> SparsePolynomial:
        return SparsePolynomial(self.num_vars, self.terms, max_degree)

    def restrict(self, num_vars: int) -> SparsePolynomial:
        """Set x_{num_vars+1}, ... to zero."""
        kept = {e[:num_vars]: c for e, c in self.terms.items() if not any(e[num_vars:])}
        return SparsePolynomial(num_vars, kept, self.max_degree)

    def swap(self, i: int) -> SparsePolynomial:
        """Exchange x_i and x_{i+1}."""
        def sw(e):
            e = list(e)
            e[i - 1], e[i] = e[i], e[i - 1]
            return tuple(e)
        return SparsePolynomial(self.num_vars, {sw(e): c for e, c in self.terms.items()},
                                self.max_degree)

    def permute_variables(self, perm: tuple[int, ...]) -> SparsePolynomial:
        """Substitute x_k -> x_{perm[k-1]}."""
        def image(e):
            out = [0] * self.num_vars
            for k, a in enumerate(e):
                out[perm[k] - 1] += a
            return tuple(out)
        return SparsePolynomial(self.num_vars, {image(e): c for e, c in self.terms.items()},
                                self.max_degree)

    def divide_by_difference(self, i: int) -> SparsePolynomial:
        """Exact quotient by (x_i - x_{i+1}); raises if there is a remainder.

        Long division in x_i: the leading x_i-power term of the dividend
        determines the next quotient term.
        """
        remainder = dict(self.terms)
        quotient: dict[Exponents, int] = {}
        a, b = i - 1, i
        while remainder:
            exps = max(remainder, key=lambda e: (e[a], e))
            coeff = remainder[exps]
            if exps[a] == 0:
                raise ArithmeticError(f"division by x_{i} - x_{i + 1} leaves a remainder")
            q = list(exps)
            q[a] -= 1
            q = tuple(q)
            quotient[q] = quotient.get(q, 0) + coeff
            # subtract coeff * x^q * (x_i - x_{i+1})
            for e, c in ((exps, -coeff), (q[:b] + (q[b] + 1,) + q[b + 1:], coeff)):
                total = remainder.get(e, 0) + c
                if total:
                    remainder[e] = total
                else:
                    remainder.pop(e, None)
        return SparsePolynomial(self.num_vars, quotient, None)

    def to_json(self) -> list[dict]:
        return [{"exps": list(e), "coeff": c} for e, c in self.sorted_terms()]

    def format(self) -> str:
        if not self.terms:
            return "0"
        text = ""
        for exps, coeff in self.sorted_terms():
            mono = "*".join(f"x{k + 1}" + (f"^{a}" if a > 1 else "")
                            for k, a in enumerate(exps) if a)
            size = abs(coeff)
            term = str(size) if not mono else (mono if size == 1 else f"{size}*{mono}")
            if not text:
                text = term if coeff > 0 else f"-{term}"
            else:
                text += (" + " if coeff > 0 else " - ") + term
        return text
