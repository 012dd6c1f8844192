"""Core module exports."""

from hyperwkb.core.config import Settings, load_settings
from hyperwkb.core.domain_errors import (
    CheckFailure,
    DomainError,
    NumericDomainError,
    UsageError,
    to_domain_error,
)
from hyperwkb.core.errors import (
    BranchCollisionError,
    ConvergenceError,
    DegenerateBasisError,
    DivergenceError,
    DominanceError,
    HyperwkbError,
    IrregularSingularityError,
    LatticeError,
    LogPowerError,
    ParameterError,
    PoleError,
    ResonanceError,
)
from hyperwkb.core.result import Err, Ok, Result, count_ok, fold, is_err, is_ok
from hyperwkb.core.scalars import Scalar

__all__ = [
    # Configuration
    "Settings",
    "load_settings",
    "Scalar",
    # Result types
    "Ok",
    "Err",
    "Result",
    "is_ok",
    "is_err",
    "fold",
    "count_ok",
    # Exceptions (raised)
    "HyperwkbError",
    "ParameterError",
    "PoleError",
    "DivergenceError",
    "ConvergenceError",
    "ResonanceError",
    "IrregularSingularityError",
    "LatticeError",
    "LogPowerError",
    "BranchCollisionError",
    "DominanceError",
    "DegenerateBasisError",
    # Domain errors (returned)
    "NumericDomainError",
    "UsageError",
    "CheckFailure",
    "DomainError",
    "to_domain_error",
]
