"""Variations of hypergeometric functions: recurrences, closed forms and residuals."""

from __future__ import annotations

from fractions import Fraction

from hyperwkb.cli.checks import Check, CheckContext, Measurement
from hyperwkb.variations import (
    airy_decomposition_check,
    airy_first_variation,
    airy_perturbation,
    bessel_perturbation,
    bessel_variation_u01,
    compare_variation_formula,
    binomial_closed_form,
    binomial_operator,
    first_mismatch,
    perturbed_residual,
    v2_variation,
    variation_recurrence,
)

SUITE = "variations"

HALF = Fraction(1, 2)
AIRY_COEFFICIENTS = {
    0: Fraction(1, 12),
    3: Fraction(1, 168),
    6: Fraction(29, 226800),
    9: Fraction(31, 23587200),
}


def closed_form(ctx: CheckContext) -> Measurement:
    chain = variation_recurrence(binomial_operator(0.5, 1.5), 1, 90)
    u1 = chain[1]
    dev = max(abs(u1.evaluate(t) - binomial_closed_form(0.5, 1.5, t)) for t in (0.1, 0.3, 0.5))
    printed = abs(binomial_closed_form(0.5, 1.5, 0.3, "printed") - chain[1].evaluate(0.3))
    return dev, f"printed closed form misses by {printed:.3e} at t = 0.3"


def airy_coefficients(ctx: CheckContext) -> Measurement:
    u = airy_first_variation(13)
    wrong = [n for n, c in AIRY_COEFFICIENTS.items() if u.coefficients[n] != c]
    return float(len(wrong)), f"leading exponent {u.leading_exponent}"


def exact_residuals(ctx: CheckContext) -> Measurement:
    notes = []
    worst = 0.0
    for name, pert, order in (
        ("example", binomial_operator(HALF, Fraction(3, 2)), 10),
        ("airy", airy_perturbation(), 16),
    ):
        chain = variation_recurrence(pert, 2, order)
        residual = perturbed_residual(pert, chain, order)
        worst = max(worst, residual.max_abs(2))
        notes.append(f"{name} leading power {residual.leading_power()}")
    return worst, "; ".join(notes)


def multisum_formula(ctx: CheckContext) -> Measurement:
    pert = binomial_operator(HALF, Fraction(3, 2))
    verdicts = [compare_variation_formula(pert, k, 12) for k in (1, 2)]
    bad = [v.k for v in verdicts if not v.agrees]
    return float(len(bad)), "k = 1, 2 to order 12"


def bessel_double_sum(ctx: CheckContext) -> Measurement:
    chain = variation_recurrence(bessel_perturbation(), 1, 9)
    corrected = first_mismatch(bessel_variation_u01(9), chain[1])
    printed = first_mismatch(bessel_variation_u01(9, "printed"), chain[1])
    return float(corrected is not None), f"printed double sum departs at exponent {printed}"


def v2_routes(ctx: CheckContext) -> Measurement:
    out = v2_variation(6)
    return float(out.mismatch is not None), f"agreement to exponent {out.agreement}"


def airy_decomposition(ctx: CheckContext) -> Measurement:
    check = airy_decomposition_check(16)
    note = (
        f"printed sum departs at {check.printed_sum_mismatch}, "
        f"decomposition at {check.decomposition_mismatch}"
    )
    return float(check.derived_mismatch is not None), note


CHECKS = (
    Check("example_closed_form", SUITE, 1e-10, closed_form),
    Check("airy_first_variation", SUITE, 0.0, airy_coefficients),
    Check("perturbed_residuals", SUITE, 0.0, exact_residuals),
    Check("multisum_formula", SUITE, 0.0, multisum_formula),
    Check("bessel_double_sum", SUITE, 0.0, bessel_double_sum),
    Check("v2_variation_routes", SUITE, 0.0, v2_routes),
    Check("airy_decomposition", SUITE, 0.0, airy_decomposition),
)
