"""Hypergeometric functions, their Frobenius and WKB expansions, and MZV generating functions."""

from hyperwkb.core import (
    Err,
    HyperwkbError,
    Ok,
    ParameterError,
    Result,
    Settings,
    is_err,
    is_ok,
    load_settings,
)
from hyperwkb.mzvgen import delta2, delta3, identity_522, u1_at_one
from hyperwkb.series import HyperParams, MZVIndex, multi_polylog, mzv, pfq_eval, pfq_series

__version__ = "0.1.0"

__all__ = [
    # Version
    "__version__",
    # Hypergeometric series
    "HyperParams",
    "pfq_eval",
    "pfq_series",
    # Multiple zeta values
    "MZVIndex",
    "mzv",
    "multi_polylog",
    "delta2",
    "delta3",
    "u1_at_one",
    "identity_522",
    # Configuration
    "Settings",
    "load_settings",
    # Result types
    "Ok",
    "Err",
    "Result",
    "is_ok",
    "is_err",
    # Exceptions (raised)
    "HyperwkbError",
    "ParameterError",
]
