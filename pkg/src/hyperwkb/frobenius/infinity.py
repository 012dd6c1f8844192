"""Formal solutions at t = ∞: the regular family and the WKB family."""

from __future__ import annotations

import logging

from hyperwkb.core.errors import ParameterError
from hyperwkb.opcore.action import formal_series_at_root
from hyperwkb.opcore.builders import build_hypergeometric_operator
from hyperwkb.opcore.operator import clear_negative_powers
from hyperwkb.opcore.series import GradedSeries
from hyperwkb.series.params import HyperParams
from hyperwkb.wkb.confluent import confluent_wkb
from hyperwkb.wkb.forms import WKBForm

logger = logging.getLogger(__name__)


def regular_at_infinity(params: HyperParams, order: int) -> list[GradedSeries]:
    """t^{−α_j}G_j(1/t) for each upper parameter, in the variable 1/t."""
    op_w, _ = clear_negative_powers(build_hypergeometric_operator(params).invert_variable())
    return [formal_series_at_root(op_w, a, order) for a in params.upper]


def formal_at_infinity(
    params: HyperParams, order: int
) -> tuple[list[GradedSeries], list[WKBForm]]:
    """p regular solutions and q + 1 − p WKB forms; balanced parameters have no WKB forms."""
    d = params.q + 1 - params.p
    if d < 0:
        raise ParameterError(f"{params} has p > q + 1; t = ∞ is not reachable", field="upper")
    regular = regular_at_infinity(params, order)
    forms = [confluent_wkb(params, k, order) for k in range(d)]
    logger.debug(f"formal_at_infinity {params}: {len(regular)} regular, {len(forms)} WKB")
    return regular, forms
