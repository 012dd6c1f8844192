"""Mellin operators Σ var^m P_m(𝒟) on a rational offset lattice."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm

from hyperwkb.core.errors import LatticeError
from hyperwkb.core.scalars import Scalar
from hyperwkb.opcore.polynomial import EulerPolynomial
from hyperwkb.opcore.series import Variable

Term = tuple[Fraction, EulerPolynomial]


def _normalize_terms(terms: Iterable[tuple[Fraction | int, EulerPolynomial]]) -> tuple[Term, ...]:
    merged: dict[Fraction, EulerPolynomial] = {}
    for m, p in terms:
        key = Fraction(m)
        merged[key] = merged[key] + p if key in merged else p
    return tuple(sorted(((m, p) for m, p in merged.items() if not p.is_zero()), key=lambda x: x[0]))


def _lattice_of(terms: Iterable[Term]) -> int:
    return lcm(1, *(m.denominator for m, _ in terms))


@dataclass(frozen=True, slots=True)
class MellinOperator:
    """Σ var^m P_m(𝒟); terms sorted by offset, merged, zero polynomials dropped."""

    terms: tuple[Term, ...]
    lattice: int = 1
    variable: Variable = "t"

    def __post_init__(self) -> None:
        terms = _normalize_terms(self.terms)
        object.__setattr__(self, "terms", terms)
        lattice = lcm(self.lattice, _lattice_of(terms))
        object.__setattr__(self, "lattice", lattice)

    @classmethod
    def from_mapping(
        cls, terms: Mapping[Fraction | int, EulerPolynomial], variable: Variable = "t"
    ) -> MellinOperator:
        return cls(tuple((Fraction(m), p) for m, p in terms.items()), 1, variable)

    @classmethod
    def euler(cls, variable: Variable = "t") -> MellinOperator:
        """𝒟 itself."""
        return cls(((Fraction(0), EulerPolynomial.identity()),), 1, variable)

    @classmethod
    def monomial(cls, m: Fraction | int, c: Scalar = 1, variable: Variable = "t") -> MellinOperator:
        """Multiplication by c·var^m."""
        return cls(((Fraction(m), EulerPolynomial.constant(c)),), 1, variable)

    @classmethod
    def polynomial(cls, poly: EulerPolynomial, variable: Variable = "t") -> MellinOperator:
        return cls(((Fraction(0), poly),), 1, variable)

    @classmethod
    def binomial(
        cls, a: int, c: Scalar = 1, variable: Variable = "t", order: int = 0
    ) -> MellinOperator:
        """Multiplication by (1 + c·var)^a; truncated at var^order when a < 0."""
        if a >= 0:
            coeffs = [comb(a, k) * c**k for k in range(a + 1)]
        else:
            coeffs = [(-1) ** k * comb(-a + k - 1, k) * c**k for k in range(order + 1)]
        return cls(
            tuple((Fraction(k), EulerPolynomial.constant(x)) for k, x in enumerate(coeffs)),
            1,
            variable,
        )

    @property
    def order(self) -> int:
        return max((p.degree for _, p in self.terms), default=0)

    @property
    def offsets(self) -> tuple[Fraction, ...]:
        return tuple(m for m, _ in self.terms)

    def coefficient(self, m: Fraction | int) -> EulerPolynomial:
        key = Fraction(m)
        for k, p in self.terms:
            if k == key:
                return p
        return EulerPolynomial.constant(0)

    def indicial_polynomial(self) -> EulerPolynomial:
        """P at the lowest offset."""
        if not self.terms:
            return EulerPolynomial.constant(0)
        return self.terms[0][1]

    def is_zero(self) -> bool:
        return not self.terms

    def _same_variable(self, other: MellinOperator) -> None:
        if other.variable != self.variable:
            raise LatticeError(f"operator variables differ: {self.variable} vs {other.variable}")

    def __add__(self, other: MellinOperator) -> MellinOperator:
        self._same_variable(other)
        lattice = lcm(self.lattice, other.lattice)
        return MellinOperator(self.terms + other.terms, lattice, self.variable)

    def __neg__(self) -> MellinOperator:
        return MellinOperator(tuple((m, -p) for m, p in self.terms), self.lattice, self.variable)

    def __sub__(self, other: MellinOperator) -> MellinOperator:
        return self + (-other)

    def scale(self, c: Scalar) -> MellinOperator:
        return MellinOperator(tuple((m, p * c) for m, p in self.terms), self.lattice, self.variable)

    def __matmul__(self, other: MellinOperator) -> MellinOperator:
        """Composition: (t^a P)(t^b R) = t^{a+b} P(𝒟+b) R(𝒟)."""
        self._same_variable(other)
        out: list[tuple[Fraction | int, EulerPolynomial]] = []
        for a, p in self.terms:
            for b, r in other.terms:
                out.append((a + b, p.shift(b) * r))
        return MellinOperator(tuple(out), lcm(self.lattice, other.lattice), self.variable)

    def left_shift(self, k: Fraction | int) -> MellinOperator:
        """var^k ∘ op."""
        return MellinOperator(
            tuple((m + k, p) for m, p in self.terms), self.lattice, self.variable
        )

    def substitute_polynomial(self, poly: EulerPolynomial) -> MellinOperator:
        """poly(op) by Horner in operator composition."""
        acc = MellinOperator.monomial(0, 0, self.variable)
        for c in reversed(poly.coefficients):
            acc = (acc @ self) + MellinOperator.monomial(0, c, self.variable)
        return acc

    def invert_variable(self) -> MellinOperator:
        """Rewrite in w = 1/var: var^m P(𝒟_var) = w^{-m} P(−𝒟_w)."""
        target: Variable = "1/t" if self.variable == "t" else "t"
        return MellinOperator(
            tuple((-m, p.scale(-1)) for m, p in self.terms), self.lattice, target
        )

    def with_variable(self, variable: Variable) -> MellinOperator:
        return MellinOperator(self.terms, self.lattice, variable)

    def __repr__(self) -> str:
        body = " + ".join(f"{self.variable}^{m}·{p!r}" for m, p in self.terms)
        return f"MellinOperator({body or '0'})"


def clear_negative_powers(op: MellinOperator) -> tuple[MellinOperator, Fraction]:
    """Left-multiply by var^k so that the lowest offset becomes 0; returns (op', k)."""
    if op.is_zero():
        return op, Fraction(0)
    k = -op.terms[0][0]
    return op.left_shift(k), k
