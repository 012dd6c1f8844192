"""Worked perturbations: the binomial case, Bessel-type ₀F₂, the V₂ kernel and Airy."""

from __future__ import annotations

import cmath
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Literal

from hyperwkb.core.scalars import Scalar
from hyperwkb.opcore import EulerPolynomial, GradedSeries, MellinOperator, Variable
from hyperwkb.series.params import HyperParams
from hyperwkb.series.pfq import pochhammer
from hyperwkb.variations.chain import first_mismatch, variation_recurrence
from hyperwkb.variations.operator import Perturbation, PerturbedOperator

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)

ClosedFormVariant = Literal["derived", "printed"]
DoubleSumVariant = Literal["corrected", "printed"]


def _series_from_terms(
    terms: dict[Scalar, Scalar], order: int, *, variable: Variable = "t", lattice: int = 1
) -> GradedSeries:
    """Series on the 1/L lattice from {exponent: coefficient}, kept up to var^order."""
    if not terms:
        return GradedSeries(variable, lattice, order, (0,))
    lead = min(terms, key=lambda e: complex(e).real)
    length = int((order - lead) * lattice) + 1
    coeffs: list[Scalar] = [0] * max(length, 1)
    for e, c in terms.items():
        n = int((e - lead) * lattice)
        if n < length:
            coeffs[n] = coeffs[n] + c
    return GradedSeries.from_coefficients(
        coeffs, variable=variable, lattice=lattice, leading_exponent=lead
    )


# Binomial case: {𝒟 − t(𝒟 + α) − εt²(𝒟 + γ)}u = 0


def binomial_operator(alpha: Scalar, gamma: Scalar) -> PerturbedOperator:
    return PerturbedOperator.hypergeometric(
        HyperParams.of([alpha], []), EulerPolynomial((gamma, 1))
    )


def binomial_closed_form(
    alpha: Scalar, gamma: Scalar, t: complex, variant: ClosedFormVariant = "derived"
) -> complex:
    """First variation of (1−t)^{−α} in closed form.

    derived: (1−t)^{−α}[(2α−γ)ln(1−t) + αt/(1−t) + (α−γ)t]
    printed: (1−t)^{−α}[(2−γ)ln(1−t) + t(2−t)/(1−t) − t]
    """
    a, g, tc = complex(alpha), complex(gamma), complex(t)
    log1 = cmath.log(1 - tc)
    if variant == "derived":
        bracket = (2 * a - g) * log1 + a * tc / (1 - tc) + (a - g) * tc
    else:
        bracket = (2 - g) * log1 + tc * (2 - tc) / (1 - tc) - tc
    return cmath.exp(-a * log1) * bracket


# Bessel-type ₀F₂: F(−λ, ελ, ε̄λ; 1, 1; t) with y = λ³t, ε = λ⁻³


def bessel_perturbation() -> PerturbedOperator:
    """(𝒟³ + y)U = ε·y𝒟³U."""
    cube = EulerPolynomial((0, 0, 0, 1))
    base = MellinOperator(
        ((Fraction(0), cube), (Fraction(1), EulerPolynomial.constant(1))), 1, "y"
    )
    return PerturbedOperator(base, (Perturbation(1, Fraction(1), cube),))


def bessel_variation_u01(order: int, variant: DoubleSumVariant = "corrected") -> GradedSeries:
    """U_{0,1} by the double sum over m, n.

    corrected: −Σ_{m≥1, n≥0} n³(−y)^{m+n}/((m+n)!)³
    printed:    Σ_{m≥0, n≥0} n³(−y)^{m+n}/((m+n)!)³
    """
    coeffs: list[Scalar] = []
    for total in range(order + 1):
        top = total - 1 if variant == "corrected" else total
        cubes = sum(n**3 for n in range(top + 1))
        sign = -1 if variant == "corrected" else 1
        coeffs.append(Fraction(sign * (-1) ** total * cubes, factorial(total) ** 3))
    return GradedSeries.from_coefficients(coeffs, variable="y")


# V₂ kernel: (𝒬 − z − λ^{−3/2}z^{1/2}ℛ + λ^{−3}z𝒮)V = 0


def v2_perturbation() -> PerturbedOperator:
    """𝒬 = 2𝒟(2𝒟−1)(2𝒟−2), ℛ = 2𝒟(2𝒟−1)(4𝒟−1), 𝒮 = (2𝒟)³; ε = λ^{−3/2}."""
    q = EulerPolynomial.from_roots([0, HALF, 1], lead=8)
    r = EulerPolynomial.from_roots([0, HALF, Fraction(1, 4)], lead=16)
    s = EulerPolynomial((0, 0, 0, 8))
    base = MellinOperator(((Fraction(0), q), (Fraction(1), EulerPolynomial.constant(-1))), 1, "z")
    return PerturbedOperator(base, (Perturbation(1, HALF, r), Perturbation(2, Fraction(1), -s)), 1)


def v2_double_sum(order: int) -> GradedSeries:
    """(8/√z)Σ_{m,n≥1}(4n−1)(1/2)_n(z/2)^{m+n}/((2m+2n−1)!(1/2)_{m+n−1}(n−1)!)."""
    terms: dict[Scalar, Scalar] = {}
    total = 2
    while total - HALF <= order:
        inner = sum(
            (Fraction(4 * n - 1) * pochhammer(HALF, n) / factorial(n - 1) for n in range(1, total)),
            Fraction(0),
        )
        scale = Fraction(8, 2**total) / (factorial(2 * total - 1) * pochhammer(HALF, total - 1))
        terms[total - HALF] = scale * inner
        total += 1
    return _series_from_terms(terms, order, variable="z", lattice=2)


@dataclass(frozen=True, slots=True)
class V2Variation:
    recurrence: GradedSeries
    double_sum: GradedSeries
    mismatch: Scalar | None

    @property
    def agreement(self) -> int:
        """Number of leading half-integer lattice points on which both routes agree."""
        common = min(len(self.recurrence.coefficients), len(self.double_sum.coefficients))
        if self.mismatch is None:
            return common
        return int((self.mismatch - self.recurrence.leading_exponent) * 2)


def v2_variation(order: int) -> V2Variation:
    """V_{2,1} from the recurrence on the z^{1/2} lattice and from the double sum."""
    recurrence = variation_recurrence(v2_perturbation(), 1, order)[1]
    double_sum = v2_double_sum(order)
    out = V2Variation(recurrence, double_sum, first_mismatch(recurrence, double_sum))
    logger.info(f"v2_variation to z^{order}: agreement on {out.agreement} lattice points")
    return out


# Airy: ü = (t + εt²)u around u₁ = F(∅; 2/3; t³/9)


def airy_perturbation() -> PerturbedOperator:
    """(∂² − t)u = ε t²u, with ∂² − t = t⁻²(𝒟(𝒟−1) − t³)."""
    base = MellinOperator(
        (
            (Fraction(-2), EulerPolynomial.falling_factorial(2)),
            (Fraction(1), EulerPolynomial.constant(-1)),
        )
    )
    return PerturbedOperator(base, (Perturbation(1, Fraction(2), EulerPolynomial.constant(1)),))


def airy_first_variation(order: int) -> GradedSeries:
    """u_{1,1} = t⁴/12 + t⁷/168 + … with u_{1,1}(0) = u̇_{1,1}(0) = 0."""
    return variation_recurrence(airy_perturbation(), 1, order)[1]


@dataclass(frozen=True, slots=True)
class AiryDecomposition:
    """The first Airy variation by the recurrence and by three double-sum forms.

    derived_sum: t·Σ_{N≥1} z^N/(N!(4/3)_N)·Σ_{k<N}(4/3)_k/(2/3)_k
    printed_sum: −(3/t)Σ_{l≥1, m≥0}(1/3)_l z^{l+m}/((−1/3)_l(1/3)_{l+m}(l+m)!)
    printed_decomposition: −(3/t)G(z, z) − (3/t)F(∅; 1/3; z)
    all with z = t³/9.
    """

    recurrence: GradedSeries
    derived_sum: GradedSeries
    printed_sum: GradedSeries
    printed_decomposition: GradedSeries

    @property
    def derived_mismatch(self) -> Scalar | None:
        return first_mismatch(self.derived_sum, self.recurrence)

    @property
    def printed_sum_mismatch(self) -> Scalar | None:
        return first_mismatch(self.printed_sum, self.recurrence)

    @property
    def decomposition_mismatch(self) -> Scalar | None:
        """Where the G-decomposition departs from the double sum it rewrites."""
        return first_mismatch(self.printed_decomposition, self.printed_sum)


def airy_g_diagonal(big_n: int) -> Fraction:
    """Coefficient of z^N in G(z, z) = Σ_{l,m}(1/3)_l z^{l+m}/((−1/3)_l(1/3)_{l+m}(l+m)!)."""
    inner = sum(
        (pochhammer(THIRD, k) / pochhammer(-THIRD, k) for k in range(big_n + 1)), Fraction(0)
    )
    return inner / (pochhammer(THIRD, big_n) * factorial(big_n))


def airy_decomposition_check(order: int) -> AiryDecomposition:
    recurrence = airy_first_variation(order)
    derived: dict[Scalar, Scalar] = {}
    printed: dict[Scalar, Scalar] = {}
    decomposition: dict[Scalar, Scalar] = {}
    big_n = 0
    while 3 * big_n - 1 <= order:
        z_power = Fraction(1, 9**big_n)
        f_coeff = 1 / (pochhammer(THIRD, big_n) * factorial(big_n))
        g_coeff = airy_g_diagonal(big_n)
        decomposition[3 * big_n - 1] = -3 * z_power * (g_coeff + f_coeff)
        if big_n >= 1:
            printed[3 * big_n - 1] = -3 * z_power * (g_coeff - f_coeff)
            inner = sum(
                (pochhammer(Fraction(4, 3), k) / pochhammer(Fraction(2, 3), k)
                 for k in range(big_n)),
                Fraction(0),
            )
            derived[3 * big_n + 1] = (
                z_power * inner / (factorial(big_n) * pochhammer(Fraction(4, 3), big_n))
            )
        big_n += 1
    out = AiryDecomposition(
        recurrence,
        _series_from_terms(derived, order),
        _series_from_terms(printed, order),
        _series_from_terms(decomposition, order),
    )
    if out.derived_mismatch is not None:
        logger.warning(f"Airy variation: derived double sum departs at t^{out.derived_mismatch}")
    if out.printed_sum_mismatch is not None:
        logger.info(f"Airy variation: printed double sum departs at t^{out.printed_sum_mismatch}")
    if out.decomposition_mismatch is not None:
        logger.info(f"Airy variation: G-decomposition departs at t^{out.decomposition_mismatch}")
    return out
