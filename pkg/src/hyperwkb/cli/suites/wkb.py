"""Large-|t| and large-parameter asymptotics against exact values."""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

from scipy.special import beta as beta_fn
from scipy.special import betainc

from hyperwkb.cli.checks import Check, CheckContext, Measurement
from hyperwkb.series import HyperParams, pfq_eval
from hyperwkb.wkb import (
    hj_actions,
    kummer_lower_line_asymptotic,
    kummer_stokes,
    kummer_upper_line_asymptotic,
    thm3_asymptotic_eval,
    thm3_constants,
    thm4_eval,
)

SUITE = "wkb"

BESSEL = HyperParams.of([], [1])
TRIPLE = HyperParams.of([], [1, 1])
EPS = cmath.exp(1j * math.pi / 3)
CUBIC_NUS = (-1, EPS, EPS.conjugate())
CUBIC_SIGMAS = (EPS, -1, EPS.conjugate())
KUMMER = (0.3, 1.7)


def _relative_error(params: HyperParams, t: float, terms: int = 1) -> float:
    exact = complex(pfq_eval(params, t).value)
    return abs(thm3_asymptotic_eval(params, t, terms) - exact) / abs(exact)


def _delta2_polynomial(a: int) -> float:
    return float(pfq_eval(HyperParams.of([a, -a], [1]), Fraction(1, 2)).value.real)


def bessel_constant(ctx: CheckContext) -> Measurement:
    k = thm3_constants([1])[0]
    return abs(k - 1 / (2 * math.sqrt(math.pi))), f"K = {k.real:.15f}"


def bessel_leading_order(ctx: CheckContext) -> Measurement:
    return _relative_error(BESSEL, 400.0), "0F1(;1;t) at t = 400"


def bessel_error_rate(ctx: CheckContext) -> Measurement:
    ratio = _relative_error(BESSEL, 1600.0) / _relative_error(BESSEL, 400.0)
    return abs(ratio - 0.5), f"error ratio {ratio:.4f} when t quadruples"


def triple_leading_order(ctx: CheckContext) -> Measurement:
    return _relative_error(TRIPLE, 1000.0), "0F2(;1,1;t) at t = 1000"


def large_parameter_rate(ctx: CheckContext) -> Measurement:
    errors = []
    for a in (8, 16):
        exact = _delta2_polynomial(a)
        approx = thm4_eval([1, -1], [1], a, 0.5, combine_oscillatory=True)
        errors.append(abs(approx.real - exact) / abs(exact))
    ratio = errors[1] / errors[0]
    return abs(ratio - 0.5), f"errors {errors[0]:.3e}, {errors[1]:.3e}; ratio {ratio:.3f}"


def action_quadrature(ctx: CheckContext) -> Measurement:
    path = [0.1, 0.5, 0.8]
    _, s = hj_actions(CUBIC_NUS, path)
    worst = 0.0
    for i, t in enumerate(path):
        closed = float(beta_fn(1 / 3, 2 / 3) * betainc(1 / 3, 2 / 3, t))
        for k, sigma in enumerate(CUBIC_SIGMAS):
            worst = max(worst, abs(s[i, k] - sigma * closed) / abs(closed))
    return worst, "cubic actions against the incomplete Beta function"


def kummer_relation(ctx: CheckContext) -> Measurement:
    return kummer_stokes(*KUMMER).relation_residual, f"α, β = {KUMMER}"


def kummer_upper_line(ctx: CheckContext) -> Measurement:
    s = 30.0
    exact = complex(pfq_eval(HyperParams.of([KUMMER[0]], [KUMMER[1]]), 1j * s).value)
    corrected = abs(kummer_upper_line_asymptotic(*KUMMER, s) - exact) / abs(exact)
    printed = abs(kummer_upper_line_asymptotic(*KUMMER, s, "printed") - exact) / abs(exact)
    return corrected, f"printed phase misses by {printed:.3f} at s = {s:g}"


def kummer_lower_line(ctx: CheckContext) -> Measurement:
    s = 30.0
    exact = complex(pfq_eval(HyperParams.of([KUMMER[0]], [KUMMER[1]]), -1j * s).value)
    corrected = abs(kummer_lower_line_asymptotic(*KUMMER, s) - exact) / abs(exact)
    printed = abs(kummer_lower_line_asymptotic(*KUMMER, s, "printed") - exact) / abs(exact)
    return corrected, f"printed phases miss by {printed:.3f} at s = {s:g}"


CHECKS = (
    Check("bessel_leading_constant", SUITE, 1e-12, bessel_constant),
    Check("bessel_leading_order", SUITE, 0.02, bessel_leading_order),
    Check("bessel_error_rate", SUITE, 0.1, bessel_error_rate),
    Check("triple_confluent_leading_order", SUITE, 0.02, triple_leading_order),
    Check("large_parameter_error_rate", SUITE, 0.2, large_parameter_rate),
    Check("action_quadrature", SUITE, 1e-9, action_quadrature),
    Check("kummer_stokes_relation", SUITE, 1e-12, kummer_relation),
    Check("kummer_upper_line", SUITE, 0.05, kummer_upper_line),
    Check("kummer_lower_line", SUITE, 0.05, kummer_lower_line),
)
