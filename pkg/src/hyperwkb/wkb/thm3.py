"""Large-|t| asymptotics of complete-confluence functions ₀F_q(;β;t)."""

from __future__ import annotations

import cmath
import logging
import math
from collections.abc import Sequence

from hyperwkb.core.errors import DominanceError, ParameterError
from hyperwkb.core.scalars import Scalar
from hyperwkb.series.params import HyperParams
from hyperwkb.special.gamma import gamma
from hyperwkb.wkb.confluent import confluent_wkb
from hyperwkb.wkb.forms import WKBForm, unit_root

logger = logging.getLogger(__name__)

DOMINANCE_MARGIN = 5.0


def _leading_constant(betas: Sequence[Scalar]) -> complex:
    q = len(betas)
    prod = 1 + 0j
    for b in betas:
        prod *= gamma(b)
    return prod * (q + 1) ** -0.5 * (2 * math.pi) ** (-q / 2)


def _power_exponent(betas: Sequence[Scalar]) -> complex:
    """−q/2 − β with β = Σ(β_j − 1); equals d·μ."""
    return -len(betas) / 2 - sum((complex(b) - 1 for b in betas), 0j)


def thm3_constants(betas: Sequence[Scalar]) -> list[complex]:
    """K_l = (q+1)^{−1/2}·∏Γ(β_j)·(2π)^{−q/2}·(ζ^l)^{−q/2−β}, l = 0..q.

    Powers of ζ^l are principal, which is the convention on the ray arg t = 0.
    """
    d = len(betas) + 1
    k = _leading_constant(betas)
    e = _power_exponent(betas)
    return [k * cmath.exp(e * cmath.log(complex(unit_root(j, d)))) for j in range(d)]


def select_branches(
    exponents: Sequence[float], *, combine_oscillatory: bool = False
) -> list[int]:
    """Branches kept for evaluation, given the real parts of their exponents."""
    order = sorted(range(len(exponents)), key=lambda j: exponents[j], reverse=True)
    top = exponents[order[0]]
    if len(order) == 1 or top - exponents[order[1]] > DOMINANCE_MARGIN:
        return [order[0]]
    if not combine_oscillatory:
        raise DominanceError(
            f"no branch dominates: leading real parts {top:.3f} and "
            f"{exponents[order[1]]:.3f} differ by less than {DOMINANCE_MARGIN}"
        )
    return [j for j in order if top - exponents[j] <= DOMINANCE_MARGIN]


def thm3_asymptotic_eval(
    params: HyperParams,
    t: complex,
    n_amp_terms: int = 1,
    *,
    combine_oscillatory: bool = False,
) -> complex:
    """Σ over dominant branches of K·e^{dT}·T^{−q/2−β}·H(1/T), T^d = t."""
    if params.p != 0:
        raise ParameterError(f"{params} is not completely confluent (needs p = 0)", field="upper")
    if n_amp_terms < 1:
        raise ParameterError("need at least one amplitude term", field="n_amp_terms")
    tc = complex(t)
    if tc == 0:
        raise ParameterError("the expansion is at t = ∞", field="t")
    form: WKBForm = confluent_wkb(params, 0, max(n_amp_terms - 1, 1)).truncated(n_amp_terms)
    d = form.degree
    root = cmath.exp(cmath.log(tc) / d)
    big_ts = [complex(unit_root(j, d)) * root for j in range(d)]
    kept = select_branches(
        [d * bt.real for bt in big_ts], combine_oscillatory=combine_oscillatory
    )
    k = _leading_constant(params.lower)
    e = _power_exponent(params.lower)
    total = 0j
    for j in kept:
        bt = big_ts[j]
        total += k * cmath.exp(d * bt + e * cmath.log(bt)) * form.amplitude_at(1 / bt)
    logger.debug(f"thm3_asymptotic_eval: {params} at t={tc}, branches {kept}")
    return total
