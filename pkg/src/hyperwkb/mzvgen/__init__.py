"""Generating functions of the MZVs ζ(2,…,2) and ζ(3,…,3) and the solutions they come from."""

from hyperwkb.mzvgen.asymptotics import (
    Identity522,
    Nullspace,
    exponential_combination,
    identity_522,
    omega,
    phi2_asymptotic,
    phi2_relative_error,
    rational_nullspace,
    sector_expansion_nullspace,
    sector_formula,
    stokes_jump,
)
from hyperwkb.mzvgen.genfun import (
    GenFunValue,
    delta2,
    delta3,
    delta3_connection,
    delta3_printed_gamma,
    delta_coefficients,
    genfun_value,
    u1_at_one,
)
from hyperwkb.mzvgen.lemma53 import (
    AtOneReport,
    AtOneRow,
    Lemma53Report,
    ThirdOrderChain,
    U2RowEntry,
    U2RowReport,
    lemma53_at_one,
    lemma53_check,
    lemma53_u2_row_report,
    polylog_forms,
    third_order_chain,
    words_with,
)
from hyperwkb.mzvgen.witness import (
    LambdaWitness,
    ThetaSample,
    WitnessRow,
    determinant_ratio,
    lambda_jet,
    lambda_ode_witness,
    theta_sample,
)

__all__ = [
    # Generating functions
    "GenFunValue",
    "delta2",
    "delta3",
    "delta3_printed_gamma",
    "delta_coefficients",
    "genfun_value",
    "u1_at_one",
    "delta3_connection",
    # Third-order solutions
    "ThirdOrderChain",
    "third_order_chain",
    "words_with",
    "polylog_forms",
    "Lemma53Report",
    "lemma53_check",
    "AtOneRow",
    "AtOneReport",
    "lemma53_at_one",
    "U2RowEntry",
    "U2RowReport",
    "lemma53_u2_row_report",
    # Large λ
    "Identity522",
    "identity_522",
    "exponential_combination",
    "omega",
    "sector_formula",
    "phi2_asymptotic",
    "phi2_relative_error",
    "stokes_jump",
    "Nullspace",
    "rational_nullspace",
    "sector_expansion_nullspace",
    # λ-equation
    "LambdaWitness",
    "ThetaSample",
    "WitnessRow",
    "lambda_jet",
    "determinant_ratio",
    "theta_sample",
    "lambda_ode_witness",
]
