"""WKB expansions at t = ∞ and in a large parameter, with Kummer Stokes data."""

from hyperwkb.wkb.confluent import (
    amplitude_operator,
    confluence_degree,
    confluent_wkb,
    wkb_exponents,
)
from hyperwkb.wkb.forms import WKBForm, unit_root
from hyperwkb.wkb.large_param import (
    LargeParamWKB,
    hj_actions,
    large_param_branches,
    thm4_eval,
    transport_amplitude,
)
from hyperwkb.wkb.stokes import (
    KummerStokes,
    kummer_lower_line_asymptotic,
    kummer_stokes,
    kummer_upper_line_asymptotic,
)
from hyperwkb.wkb.thm3 import select_branches, thm3_asymptotic_eval, thm3_constants

__all__ = [
    # Forms at infinity
    "WKBForm",
    "unit_root",
    "confluence_degree",
    "wkb_exponents",
    "amplitude_operator",
    "confluent_wkb",
    # Complete confluence
    "thm3_constants",
    "thm3_asymptotic_eval",
    "select_branches",
    # Large parameter
    "LargeParamWKB",
    "large_param_branches",
    "hj_actions",
    "transport_amplitude",
    "thm4_eval",
    # Stokes data
    "KummerStokes",
    "kummer_stokes",
    "kummer_upper_line_asymptotic",
    "kummer_lower_line_asymptotic",
]
