"""Operator and series algebra in the Euler derivative."""

from hyperwkb.opcore.action import apply, formal_series_at_root, residual_norm
from hyperwkb.opcore.builders import (
    build_hypergeometric_operator,
    hypergeometric_polynomials,
    one_minus_t_transform,
    substitute_one_minus_t,
)
from hyperwkb.opcore.logstack import AlignedStack, LogStackSolution
from hyperwkb.opcore.operator import MellinOperator, clear_negative_powers
from hyperwkb.opcore.polynomial import EulerPolynomial
from hyperwkb.opcore.series import GradedSeries, Variable, lattice_offset

__all__ = [
    # Values
    "EulerPolynomial",
    "GradedSeries",
    "Variable",
    "LogStackSolution",
    "AlignedStack",
    "MellinOperator",
    # Operations
    "build_hypergeometric_operator",
    "hypergeometric_polynomials",
    "substitute_one_minus_t",
    "one_minus_t_transform",
    "clear_negative_powers",
    "apply",
    "residual_norm",
    "formal_series_at_root",
    "lattice_offset",
]
