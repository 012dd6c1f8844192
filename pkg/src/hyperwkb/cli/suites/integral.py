"""Integral and residue representations against direct summation."""

from __future__ import annotations

from scipy.special import airy, j0, jv

from hyperwkb.cli.checks import Check, CheckContext, Measurement
from hyperwkb.core.scalars import Scalar
from hyperwkb.integralrep import (
    adjudicate_thm2,
    airy_ai_series,
    bessel_j0_residue,
    bessel_j_integral,
    euler_gauss_integral,
    euler_step_integral,
    kummer_integral,
    thm1_residue_formula,
    thm2_confluent_formula,
    v_integral_reps,
    v_series,
)
from hyperwkb.series import HyperParams, pfq_eval

SUITE = "integral"

BALANCED_GRID = (
    (HyperParams.of([0.4, 0.8], [2.5]), 0.36),
    (HyperParams.of([0.7, 1.3], [1.8]), 0.1),
    (HyperParams.of([0.7, 1.3], [1.8]), 0.6),
)
CONFLUENT_GRID = (
    (HyperParams.of([], [2.4]), 0.5),
    (HyperParams.of([0.3], [1.7]), 2.0),
)
TORUS_POINT = (HyperParams.of([0.3, 0.5, 0.9], [2.5, 3.0]), 0.2)


def _series(params: HyperParams, t: Scalar) -> complex:
    return complex(pfq_eval(params, t).value)


def euler_gauss(ctx: CheckContext) -> Measurement:
    exact = _series(HyperParams.of([0.5, 0.7], [2.2]), 0.3)
    dev = abs(euler_gauss_integral(0.5, 0.7, 2.2, 0.3) - exact)
    return dev, "2F1(0.5,0.7;2.2;0.3)"


def euler_step(ctx: CheckContext) -> Measurement:
    params = HyperParams.of([0.3, 0.4, 0.8], [1.5, 2.1])
    return abs(euler_step_integral(params, 0.36) - _series(params, 0.36)), str(params)


def kummer(ctx: CheckContext) -> Measurement:
    dev = abs(kummer_integral(0.3, 1.7, 2.0) - _series(HyperParams.of([0.3], [1.7]), 2.0))
    return dev, "1F1(0.3;1.7;2)"


def bessel_weight(ctx: CheckContext) -> Measurement:
    dev = max(abs(bessel_j_integral(nu, z) - jv(nu, z)) for nu, z in ((1.5, 2.0), (0.5, 3.0)))
    printed = abs(bessel_j_integral(1.5, 2.0, "printed") - jv(1.5, 2.0))
    return dev, f"weight (1−τ)^ν misses J_1.5(2) by {printed:.3e}"


def bessel_residue(ctx: CheckContext) -> Measurement:
    return abs(bessel_j0_residue(2.0) - j0(2.0)), "J₀(2) from one contour"


def airy_combination(ctx: CheckContext) -> Measurement:
    return max(abs(airy_ai_series(t) - airy(t)[0]) for t in (-2.0, 0.0, 1.0, 3.0)), ""


def v_kernels(ctx: CheckContext) -> Measurement:
    worst = 0.0
    for z in (1.0, 4.0):
        (r1, r2), (s1, s2) = v_integral_reps(z), v_series(z)
        worst = max(worst, abs(r1 - s1), abs(r2 - s2))
    return worst, "V₁ and V₂ at z = 1, 4"


def balanced_residue(ctx: CheckContext) -> Measurement:
    dev = max(abs(thm1_residue_formula(p, t) - _series(p, t)) for p, t in BALANCED_GRID)
    return dev, f"{len(BALANCED_GRID)} 2F1 points"


def confluent_residue(ctx: CheckContext) -> Measurement:
    dev = max(abs(thm2_confluent_formula(p, t) - _series(p, t)) for p, t in CONFLUENT_GRID)
    return dev, "0F1 and 1F1"


def torus_residue(ctx: CheckContext) -> Measurement:
    params, t = TORUS_POINT
    return abs(thm1_residue_formula(params, t) - _series(params, t)), str(params)


def confluent_adjudication(ctx: CheckContext) -> Measurement:
    v = adjudicate_thm2()
    note = (
        f"verdict {v.verdict}: printed constant {v.printed_constant_error:.3e}, "
        f"printed exponent {v.printed_exponent_error:.3e}"
    )
    return v.derived_error, note


CHECKS = (
    Check("euler_gauss_integral", SUITE, 1e-8, euler_gauss),
    Check("euler_step_integral", SUITE, 1e-8, euler_step),
    Check("kummer_integral", SUITE, 1e-8, kummer),
    Check("bessel_j_weight", SUITE, 1e-8, bessel_weight),
    Check("bessel_j0_residue", SUITE, 1e-8, bessel_residue),
    Check("airy_combination", SUITE, 1e-8, airy_combination),
    Check("v_kernel_residues", SUITE, 1e-8, v_kernels),
    Check("balanced_residue_formula", SUITE, 1e-7, balanced_residue),
    Check("confluent_residue_formula", SUITE, 1e-7, confluent_residue),
    Check("torus_residue_formula", SUITE, 1e-4, torus_residue),
    Check("confluent_formula_adjudication", SUITE, 1e-8, confluent_adjudication),
)
