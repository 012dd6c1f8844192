"""Local solutions at singular points, connection coefficients and normal forms."""

from hyperwkb.frobenius.at_one import (
    frobenius_at_one,
    zeta2_basis_at_one,
    zeta2_operator,
    zeta2_params,
    zeta3_basis_at_one,
    zeta3_operator,
    zeta3_params,
)
from hyperwkb.frobenius.connection import ConnectionData, series_target, solve_connection
from hyperwkb.frobenius.deformation import deformed_v2, v3_mu_limit, v_basis, v_operator
from hyperwkb.frobenius.infinity import formal_at_infinity, regular_at_infinity
from hyperwkb.frobenius.langer import langer_normalize, langer_residual
from hyperwkb.frobenius.local import (
    FrobeniusBasis,
    IndicialRoot,
    SingularPoint,
    frobenius_at_zero,
    indicial_roots,
)
from hyperwkb.frobenius.wasow import BivariateSeries, WasowTransform, wasow_transform

__all__ = [
    # Bases
    "FrobeniusBasis",
    "IndicialRoot",
    "SingularPoint",
    "indicial_roots",
    "frobenius_at_zero",
    "frobenius_at_one",
    "formal_at_infinity",
    "regular_at_infinity",
    # Equations of the MZV generating functions
    "zeta2_params",
    "zeta3_params",
    "zeta2_operator",
    "zeta3_operator",
    "zeta2_basis_at_one",
    "zeta3_basis_at_one",
    # Triply confluent equation
    "v_operator",
    "v_basis",
    "deformed_v2",
    "v3_mu_limit",
    # Connection
    "ConnectionData",
    "solve_connection",
    "series_target",
    # Normal forms
    "BivariateSeries",
    "WasowTransform",
    "wasow_transform",
    "langer_normalize",
    "langer_residual",
]
