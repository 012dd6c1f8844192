"""Bases at t = 1 via the substitution s = 1 − t."""

from __future__ import annotations

import cmath
import logging

from hyperwkb.core.errors import ParameterError
from hyperwkb.core.scalars import Scalar
from hyperwkb.frobenius.local import FrobeniusBasis, frobenius_at_zero
from hyperwkb.opcore.builders import build_hypergeometric_operator, substitute_one_minus_t
from hyperwkb.opcore.operator import MellinOperator
from hyperwkb.opcore.polynomial import EulerPolynomial
from hyperwkb.series.params import HyperParams

logger = logging.getLogger(__name__)

EPSILON = cmath.exp(1j * cmath.pi / 3)


def frobenius_at_one(params: HyperParams, order: int) -> FrobeniusBasis:
    """Frobenius basis in s = 1 − t of the balanced equation for params."""
    if params.p != params.q + 1:
        raise ParameterError(f"{params} is not balanced (p = q + 1)", field="upper")
    op = substitute_one_minus_t(build_hypergeometric_operator(params), order)
    return frobenius_at_zero(op, order, point="1")


def zeta3_params(lam: Scalar) -> HyperParams:
    """(−λ, ελ, ε̄λ; 1, 1) with ε = e^{iπ/3}."""
    lc = complex(lam)
    return HyperParams.of([-lc, EPSILON * lc, EPSILON.conjugate() * lc], [1, 1])


def zeta2_params(lam: Scalar) -> HyperParams:
    """(λ, −λ; 1)."""
    return HyperParams.of([lam, -lam], [1])


def zeta3_operator(lam: Scalar) -> MellinOperator:
    """(1 − t)𝒟³ + λ³t, exact for exact λ."""
    d3 = MellinOperator.polynomial(EulerPolynomial((0, 0, 0, 1)))
    return d3 - d3.left_shift(1) + MellinOperator.monomial(1, lam**3)


def zeta2_operator(lam: Scalar) -> MellinOperator:
    """(1 − t)𝒟² + λ²t."""
    d2 = MellinOperator.polynomial(EulerPolynomial((0, 0, 1)))
    return d2 - d2.left_shift(1) + MellinOperator.monomial(1, lam**2)


def zeta3_basis_at_one(lam: Scalar, order: int) -> FrobeniusBasis:
    """(v₁, v₂, v₃) in s = 1 − t normalized as

    v₁ = λ^{3/2}s + O(s²), v₂ = λ³s² + O(s³), v₃ = ¼v₂·ln(λ³s²) + 1 + O(s³).
    """
    raw = frobenius_at_zero(substitute_one_minus_t(zeta3_operator(lam), order), order, point="1")
    w_a, w_b, w_c = raw.solutions
    lc = complex(lam)
    v1 = w_b.scale(lc**1.5)
    v2 = w_c.scale(lam**3)
    v3 = w_a + v2.scale(0.25 * 3 * cmath.log(lc))
    logger.debug(f"zeta3_basis_at_one: λ={lam}, roots {[r.value for r in raw.indicial_roots]}")
    return FrobeniusBasis("1", raw.operator, (v1, v2, v3), raw.indicial_roots)


def zeta2_basis_at_one(lam: Scalar, order: int) -> FrobeniusBasis:
    """(v₀, v₁) in s = 1 − t: v₀ = 1 + O(s ln s) and v₁ = s + O(s²)."""
    op = substitute_one_minus_t(zeta2_operator(lam), order)
    return frobenius_at_zero(op, order, point="1")
