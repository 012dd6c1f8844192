"""The triply confluent equation (Q₀ − z)V = 0 and its μ-deformation."""

from __future__ import annotations

from fractions import Fraction

from hyperwkb.core.errors import ParameterError
from hyperwkb.core.scalars import Scalar, div
from hyperwkb.frobenius.local import FrobeniusBasis, frobenius_at_zero
from hyperwkb.opcore.operator import MellinOperator
from hyperwkb.opcore.polynomial import EulerPolynomial
from hyperwkb.opcore.series import GradedSeries
from hyperwkb.series.params import HyperParams
from hyperwkb.series.pfq import pfq_series

HALF = Fraction(1, 2)


def v_operator(mu: Scalar = 0) -> MellinOperator:
    """8(𝒟 − μ)(𝒟 − ½ − μ)(𝒟 − 1) − z; μ = 0 gives Q₀ − z with Q₀ = 2𝒟(2𝒟−1)(2𝒟−2)."""
    q = EulerPolynomial.from_roots([mu, HALF + mu, 1], lead=8)
    return MellinOperator.polynomial(q, "z") - MellinOperator.monomial(1, 1, "z")


def v_basis(order: int) -> FrobeniusBasis:
    """(V₁, V₂, V₃) at z = 0.

    V₁ = z^{1/2}(1 + z/6 + …), V₂ = z(1 + …) and V₃ = ¼V₂ ln z + 1 + Ṽ₃ with Ṽ₃ = O(z²).
    """
    raw = frobenius_at_zero(v_operator(), order)
    # classes: {0, 1} first, then {1/2}; within {0, 1} the root-0 column carries the log
    v3, v2, v1 = raw.solutions
    return FrobeniusBasis("0", raw.operator, (v1, v2, v3), raw.indicial_roots)


def _scaled_pfq(lower: list[Scalar], order: int) -> GradedSeries:
    return pfq_series(HyperParams.of([], lower), order, variable="z").scale_variable(
        Fraction(1, 8)
    )


def deformed_v2(mu: Scalar, order: int) -> GradedSeries:
    """V₂(z; μ) = z·F(∅; 2−μ, 3/2−μ; z/8)."""
    return _scaled_pfq([2 - mu, Fraction(3, 2) - mu], order).shift(1)


def v3_mu_limit(mu: Scalar, order: int) -> GradedSeries:
    """F(∅; μ, ½; z/8) − (z/4μ)·F(∅; 2−μ, 3/2−μ; z/8), which tends to 1 + Ṽ₃ as μ → 0."""
    if mu == 0:
        raise ParameterError("the deformation parameter must be nonzero", field="mu")
    first = _scaled_pfq([mu, HALF], order)
    second = deformed_v2(mu, order).scale(div(1, 4 * mu))
    return (first - second).truncate(order)
