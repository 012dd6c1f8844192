"""Direct evaluation of pFq series, multiple polylogarithms and MZVs."""

from hyperwkb.series.mzv import clear_mzv_cache, multi_polylog, mzv, mzv_repeated
from hyperwkb.series.params import HyperParams, MZVIndex, SeriesKind
from hyperwkb.series.pfq import PfqValue, pfq_eval, pfq_series, pochhammer, term_ratio

__all__ = [
    # Parameters
    "HyperParams",
    "MZVIndex",
    "SeriesKind",
    # pFq
    "PfqValue",
    "pochhammer",
    "term_ratio",
    "pfq_series",
    "pfq_eval",
    # MZV
    "multi_polylog",
    "mzv",
    "mzv_repeated",
    "clear_mzv_cache",
]
