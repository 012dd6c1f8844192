"""Integral representations checked by contour residues and Gauss–Jacobi quadrature."""

from hyperwkb.integralrep.classical import (
    airy_ai_series,
    bessel_j0_residue,
    bessel_j_integral,
    euler_gauss_integral,
    euler_step_integral,
    kummer_integral,
    v_integral_reps,
    v_series,
)
from hyperwkb.integralrep.contour import ContourSpec, contour_residue, torus_average
from hyperwkb.integralrep.quadrature import cube_rule, jacobi_integral, jacobi_rule
from hyperwkb.integralrep.residue import (
    Thm2Verdict,
    adjudicate_thm2,
    thm1_residue_formula,
    thm2_confluent_formula,
)

__all__ = [
    # Contours and quadrature
    "ContourSpec",
    "contour_residue",
    "torus_average",
    "jacobi_rule",
    "cube_rule",
    "jacobi_integral",
    # Classical representations
    "euler_gauss_integral",
    "euler_step_integral",
    "kummer_integral",
    "bessel_j0_residue",
    "bessel_j_integral",
    "airy_ai_series",
    "v_series",
    "v_integral_reps",
    # Residue formulas
    "thm1_residue_formula",
    "thm2_confluent_formula",
    "Thm2Verdict",
    "adjudicate_thm2",
]
