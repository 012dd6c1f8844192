"""Operator residuals of the generated local bases and the Ṽ₃ coefficient."""

from __future__ import annotations

from fractions import Fraction

from hyperwkb.cli.checks import Check, CheckContext, Measurement
from hyperwkb.frobenius import (
    FrobeniusBasis,
    deformed_v2,
    frobenius_at_one,
    frobenius_at_zero,
    v3_mu_limit,
    v_basis,
    zeta2_basis_at_one,
    zeta3_basis_at_one,
)
from hyperwkb.opcore import EulerPolynomial, MellinOperator, build_hypergeometric_operator
from hyperwkb.series import HyperParams

SUITE = "frobenius"

RESIDUAL_ORDER = 25
V3_Z2 = Fraction(-13, 576)
MU_STEP = Fraction(1, 10**6)

GAUSS = HyperParams.of([Fraction(1, 2), Fraction(1, 3)], [1])


def _airy_operator() -> MellinOperator:
    """𝒟² − 𝒟 − t³."""
    return MellinOperator.polynomial(EulerPolynomial((0, -1, 1))) - MellinOperator.monomial(3)


def _worst(basis: FrobeniusBasis) -> float:
    return max(basis.residuals(RESIDUAL_ORDER))


def exact_residuals(ctx: CheckContext) -> Measurement:
    bases = {
        "gauss at 0": frobenius_at_zero(build_hypergeometric_operator(GAUSS), RESIDUAL_ORDER),
        "gauss at 1": frobenius_at_one(GAUSS, RESIDUAL_ORDER),
        "Δ₂ equation at 1": zeta2_basis_at_one(Fraction(1, 2), RESIDUAL_ORDER),
        "triply confluent": v_basis(RESIDUAL_ORDER),
        "airy": frobenius_at_zero(_airy_operator(), RESIDUAL_ORDER),
    }
    worst = {name: _worst(b) for name, b in bases.items()}
    return max(worst.values()), ", ".join(f"{k} {v:.1e}" for k, v in worst.items())


def zeta3_residuals(ctx: CheckContext) -> Measurement:
    return _worst(zeta3_basis_at_one(0.4, RESIDUAL_ORDER)), "λ = 0.4, float coefficients"


def v3_coefficient(ctx: CheckContext) -> Measurement:
    c = v_basis(6)[2].principal.coefficients[2]
    return float(abs(c - V3_Z2)), f"z² coefficient {c}"


def v3_deformation(ctx: CheckContext) -> Measurement:
    c = v3_mu_limit(MU_STEP, 4).coefficients[2]
    return float(abs(c - V3_Z2)), f"μ = {MU_STEP}"


def v2_slope(ctx: CheckContext) -> Measurement:
    at_zero = deformed_v2(0, 4).coefficients[1]
    moved = deformed_v2(MU_STEP, 4).coefficients[1]
    slope = (moved - at_zero) / MU_STEP
    return float(abs(slope - Fraction(7, 6) / 24)), f"z² coefficient {at_zero} at μ = 0"


CHECKS = (
    Check("exact_basis_residuals", SUITE, 0.0, exact_residuals),
    Check("zeta3_basis_residual", SUITE, 1e-10, zeta3_residuals),
    Check("v3_z2_coefficient", SUITE, 0.0, v3_coefficient),
    Check("v3_deformation_limit", SUITE, 1e-5, v3_deformation),
    Check("v2_deformation_slope", SUITE, 1e-5, v2_slope),
)
