"""Δ₂ and Δ₃ by their three routes, the sextic product identity and digamma reflection."""

from __future__ import annotations

import math

from hyperwkb.cli.checks import Check, CheckContext, Measurement
from hyperwkb.mzvgen import delta2, delta3, identity_522
from hyperwkb.special import digamma_reflection_residual

SUITE = "closed-form"

GRID = (0.0, 0.3, -0.55, 0.8, 0.3 + 0.4j, -0.2 + 0.5j, 0.6j)
IDENTITY_POINTS = (0.6 + 0.2j, 1.1 - 0.3j, -0.7 + 0.5j, 0.9 + 0.9j, -1.2 - 0.4j)
REFLECTION_POINTS = (0.3, 0.45 + 0.2j, -1.7 + 0.6j)


def delta2_routes(ctx: CheckContext) -> Measurement:
    worst = 0.0
    for lam in GRID:
        closed = delta2(lam)
        series, product = delta2(lam, "series"), delta2(lam, "product")
        worst = max(worst, abs(series - closed), abs(product - closed))
    return worst, f"{len(GRID)} points with |λ| <= 0.8"


def delta2_at_half(ctx: CheckContext) -> Measurement:
    value = delta2(0.5, "series")
    return abs(value - 2 / math.pi), f"Δ₂(1/2) = {value.real:.15f}"


def delta3_routes(ctx: CheckContext) -> Measurement:
    worst = 0.0
    for lam in GRID:
        gamma_route = delta3(lam)
        worst = max(
            worst,
            abs(delta3(lam, "series") - gamma_route),
            abs(delta3(lam, "product") - gamma_route),
        )
    return worst, f"{len(GRID)} points with |λ| <= 0.8"


def sextic_product(ctx: CheckContext) -> Measurement:
    worst = 0.0
    for lam in IDENTITY_POINTS:
        out = identity_522(lam)
        worst = max(worst, out.diff / max(1.0, abs(out.lhs)))
    return worst, "Δ₃(λ)Δ₃(−λ) against Δ₂(λ)Δ₂(ελ)Δ₂(ε̄λ)"


def digamma_reflection(ctx: CheckContext) -> Measurement:
    worst = max(abs(digamma_reflection_residual(z)) for z in REFLECTION_POINTS)
    arctan = min(abs(digamma_reflection_residual(z, "arctan")) for z in REFLECTION_POINTS)
    return worst, f"arctan reading leaves a residual of at least {arctan:.3g}"


CHECKS = (
    Check("delta2_routes", SUITE, 1e-9, delta2_routes),
    Check("delta2_at_half", SUITE, 1e-12, delta2_at_half),
    Check("delta3_routes", SUITE, 1e-9, delta3_routes),
    Check("sextic_product_identity", SUITE, 1e-10, sextic_product),
    Check("digamma_reflection", SUITE, 1e-10, digamma_reflection),
)
