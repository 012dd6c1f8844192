"""Gamma-family functions, Bernoulli numbers and symmetric polynomials."""

from hyperwkb.special.bernoulli import bernoulli
from hyperwkb.special.gamma import (
    EULER_GAMMA,
    beta,
    digamma,
    digamma_reflection_residual,
    gamma,
    loggamma,
    rgamma,
    zeta,
)
from hyperwkb.special.symmetric import (
    SymmetricEval,
    brute_force_restricted_det,
    complete_homogeneous,
    elementary_symmetric,
    exp_divided_difference,
    restricted_quadform_det,
    symmetric_eval,
)

__all__ = [
    # Gamma family
    "EULER_GAMMA",
    "gamma",
    "rgamma",
    "loggamma",
    "beta",
    "digamma",
    "digamma_reflection_residual",
    "zeta",
    "bernoulli",
    # Symmetric polynomials
    "SymmetricEval",
    "symmetric_eval",
    "elementary_symmetric",
    "complete_homogeneous",
    "restricted_quadform_det",
    "brute_force_restricted_det",
    "exp_divided_difference",
]
