"""The restricted quadratic form determinant and symmetric-polynomial identities."""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations_with_replacement

from hyperwkb.cli.checks import Check, CheckContext, Measurement
from hyperwkb.core.scalars import Scalar
from hyperwkb.special import (
    brute_force_restricted_det,
    complete_homogeneous,
    exp_divided_difference,
    restricted_quadform_det,
)

SUITE = "lemma21"

RANDOM_TUPLES = 200
RATIONAL_TUPLES = 20
MAX_H_DEGREE = 6


def _brute_complete(values: tuple[Fraction, ...], p: int) -> Fraction:
    return sum(
        (math.prod(c, start=Fraction(1)) for c in combinations_with_replacement(values, p)),
        Fraction(0),
    )


def determinant_vs_brute_force(ctx: CheckContext) -> Measurement:
    rng = ctx.rng()
    worst = 0.0
    for _ in range(RANDOM_TUPLES):
        q = int(rng.integers(1, ctx.qmax + 1))
        raw = rng.normal(size=q + 1) + 1j * rng.normal(size=q + 1)
        lams: list[Scalar] = [complex(x) for x in raw]
        closed = complex(restricted_quadform_det(lams))
        brute = brute_force_restricted_det(lams)
        worst = max(worst, abs(closed - brute) / max(1.0, abs(brute)))
    return worst, f"{RANDOM_TUPLES} tuples, q <= {ctx.qmax}"


def complete_homogeneous_exact(ctx: CheckContext) -> Measurement:
    rng = ctx.rng()
    failures = 0
    for _ in range(RATIONAL_TUPLES):
        n = int(rng.integers(1, 5))
        values = tuple(
            Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 10))) for _ in range(n)
        )
        for p in range(MAX_H_DEGREE + 1):
            if complete_homogeneous(values, p) != _brute_complete(values, p):
                failures += 1
    return float(failures), f"h_p for p <= {MAX_H_DEGREE} on {RATIONAL_TUPLES} rational tuples"


def divided_difference(ctx: CheckContext) -> Measurement:
    worst = 0.0
    for x, y in ((0.3, -1.1), (1.2 + 0.5j, 0.4 - 0.2j)):
        partial, closed = exp_divided_difference(x, y, 40)
        worst = max(worst, abs(partial - closed))
    return worst, "Σ h_m(x, y)/m! against (xe^x − ye^y)/(x − y)"


CHECKS = (
    Check("restricted_determinant", SUITE, 1e-10, determinant_vs_brute_force),
    Check("complete_homogeneous_exact", SUITE, 0.0, complete_homogeneous_exact),
    Check("exp_divided_difference", SUITE, 1e-12, divided_difference),
)
