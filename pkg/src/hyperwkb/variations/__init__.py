"""Variations of hypergeometric functions under small perturbations of their operator."""

from hyperwkb.variations.chain import (
    FormulaVerdict,
    PerturbedResidual,
    compare_variation_formula,
    first_mismatch,
    perturbed_residual,
    variation_formula,
    variation_recurrence,
)
from hyperwkb.variations.examples import (
    AiryDecomposition,
    V2Variation,
    airy_decomposition_check,
    airy_first_variation,
    airy_perturbation,
    bessel_perturbation,
    bessel_variation_u01,
    binomial_closed_form,
    binomial_operator,
    v2_double_sum,
    v2_perturbation,
    v2_variation,
)
from hyperwkb.variations.operator import (
    Perturbation,
    PerturbedOperator,
    apply_polynomial,
    inverse_base_apply,
    truncate_at,
)

__all__ = [
    # Operators
    "Perturbation",
    "PerturbedOperator",
    "apply_polynomial",
    "inverse_base_apply",
    "truncate_at",
    # Chains
    "variation_recurrence",
    "perturbed_residual",
    "PerturbedResidual",
    "variation_formula",
    "compare_variation_formula",
    "FormulaVerdict",
    "first_mismatch",
    # Worked perturbations
    "binomial_operator",
    "binomial_closed_form",
    "bessel_perturbation",
    "bessel_variation_u01",
    "v2_perturbation",
    "v2_double_sum",
    "v2_variation",
    "V2Variation",
    "airy_perturbation",
    "airy_first_variation",
    "airy_decomposition_check",
    "AiryDecomposition",
]
