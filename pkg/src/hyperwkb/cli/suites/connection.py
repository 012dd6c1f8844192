"""Connection coefficients at t = 1 and the generating functions they produce."""

from __future__ import annotations

import cmath
import math

from hyperwkb.cli.checks import Check, CheckContext, Measurement
from hyperwkb.mzvgen import (
    delta3,
    delta3_connection,
    lambda_ode_witness,
    lemma53_check,
    phi2_relative_error,
    u1_at_one,
)
from hyperwkb.series import MZVIndex, mzv

SUITE = "connection"

CONNECTION_POINTS = (0.4, 0.7, 1.1)
U1_POINTS = (0.3, 0.5 + 0.2j, -0.6)


def delta3_connection_coefficient(ctx: CheckContext) -> Measurement:
    worst = 0.0
    for lam in CONNECTION_POINTS:
        worst = max(worst, abs(delta3_connection(lam).coefficients[2] - delta3(lam)))
    return worst, "third coefficient of u₀ on (v₁, v₂, v₃) against Δ₃(λ)"


def chain_polylog_forms(ctx: CheckContext) -> Measurement:
    report = lemma53_check(1, 0.5)
    return report.max_deviation, f"printed u₂ gap at k = 1 is {report.printed_u2_gap:.2e}"


def u1_routes(ctx: CheckContext) -> Measurement:
    worst = max(abs(u1_at_one(lam, "polylog") - u1_at_one(lam, "psi")) for lam in U1_POINTS)
    return worst, "Σζ(2k+1)λ^{2k} against the digamma closed form"


def stuffle(ctx: CheckContext) -> Measurement:
    z2, z3 = mzv(MZVIndex.of(2)), mzv(MZVIndex.of(3))
    rest = mzv(MZVIndex.of(2, 3)) + mzv(MZVIndex.of(3, 2)) + mzv(MZVIndex.of(5))
    return abs(z2 * z3 - rest), "ζ(2)ζ(3) = ζ(2,3) + ζ(3,2) + ζ(5)"


def zeta2(ctx: CheckContext) -> Measurement:
    return abs(mzv(MZVIndex.of(2)) - math.pi**2 / 6), "ζ(2) = π²/6"


def sector_forms(ctx: CheckContext) -> Measurement:
    far = phi2_relative_error(12.3, "upper", terms=0)
    near = phi2_relative_error(6.3, "upper", terms=0)
    lower = phi2_relative_error(12 * cmath.exp(1.2j * cmath.pi), "lower", terms=0)
    deviation = max(far, lower) if far < near else math.inf
    return deviation, f"upper error {near:.2e} at 6.3, {far:.2e} at 12.3"


def lambda_equation(ctx: CheckContext) -> Measurement:
    witness = lambda_ode_witness()
    return witness.max_dependent_ratio, f"generic ratio {witness.min_generic_ratio:.2e}"


CHECKS = (
    Check("delta3_connection", SUITE, 1e-6, delta3_connection_coefficient),
    Check("third_order_polylog_forms", SUITE, 1e-8, chain_polylog_forms),
    Check("u1_at_one_routes", SUITE, 1e-9, u1_routes),
    Check("stuffle_product", SUITE, 1e-8, stuffle),
    Check("zeta2_value", SUITE, 1e-10, zeta2),
    Check("large_lambda_sectors", SUITE, 1e-2, sector_forms),
    Check("lambda_equation", SUITE, 1e-5, lambda_equation),
)
