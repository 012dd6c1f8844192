"""The Wasow transform to the Airy form and the Langer normalization."""

from __future__ import annotations

from functools import cache

from hyperwkb.cli.checks import Check, CheckContext, Measurement
from hyperwkb.frobenius import WasowTransform, langer_normalize, langer_residual, wasow_transform

SUITE = "wasow"

T_ORDER = 20
MU_ORDER = 12
LANGER_ORDER = 8


@cache
def _quadratic_transform() -> WasowTransform:
    """Q(t; μ) for ψ(x; ε) = x²."""
    return wasow_transform({(2, 0): 1}, T_ORDER, MU_ORDER)


def unit_determinant(ctx: CheckContext) -> Measurement:
    det = _quadratic_transform().determinant()
    worst = 0.0
    for a, b, c in det.monomials():
        if b > T_ORDER - 2:
            continue
        worst = max(worst, float(abs(c - 1)) if (a, b) == (0, 0) else float(abs(c)))
    if det.coefficient(0, 0) != 1:
        worst = max(worst, float(abs(det.coefficient(0, 0) - 1)))
    return worst, f"orders (t={T_ORDER}, μ={MU_ORDER})"


def mod3_grading(ctx: CheckContext) -> Measurement:
    violations = _quadratic_transform().grading_violations()
    return float(len(violations)), f"first violations {violations[:3]}" if violations else ""


def langer_identity(ctx: CheckContext) -> Measurement:
    z, _ = langer_normalize([1], LANGER_ORDER)
    expected = (1,) + (0,) * (len(z.coefficients) - 1)
    dev = max(float(abs(c - e)) for c, e in zip(z.coefficients, expected, strict=True))
    if z.leading_exponent != 1:
        dev = max(dev, 1.0)
    return max(dev, langer_residual([1], z)), "φ ≡ 1 gives z = x"


CHECKS = (
    Check("wasow_unit_determinant", SUITE, 0.0, unit_determinant),
    Check("wasow_mod3_grading", SUITE, 0.0, mod3_grading),
    Check("langer_identity", SUITE, 0.0, langer_identity),
)
