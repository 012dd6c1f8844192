"""Domain error models for expected errors (returned, not raised)."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel

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

ErrorKind = Literal[
    "parameter",
    "pole",
    "divergence",
    "convergence",
    "resonance",
    "irregular_singularity",
    "lattice",
    "log_power",
    "branch_collision",
    "dominance",
    "degenerate_basis",
    "internal",
]


class NumericDomainError(BaseModel, frozen=True):
    """Numeric evaluation outside its domain."""

    kind: ErrorKind
    message: str
    details: dict[str, str | int | float | None] = {}


class UsageError(BaseModel, frozen=True):
    """Invalid command-line input."""

    field: str
    reason: str


class CheckFailure(BaseModel, frozen=True):
    """A verification check whose deviation exceeded its tolerance."""

    check: str
    deviation: float
    tolerance: float
    note: str = ""


DomainError = NumericDomainError | UsageError | CheckFailure

_KINDS: tuple[tuple[type[HyperwkbError], ErrorKind], ...] = (
    (ParameterError, "parameter"),
    (PoleError, "pole"),
    (DivergenceError, "divergence"),
    (ConvergenceError, "convergence"),
    (ResonanceError, "resonance"),
    (IrregularSingularityError, "irregular_singularity"),
    (LatticeError, "lattice"),
    (LogPowerError, "log_power"),
    (BranchCollisionError, "branch_collision"),
    (DominanceError, "dominance"),
    (DegenerateBasisError, "degenerate_basis"),
)


def to_domain_error(exc: HyperwkbError) -> NumericDomainError:
    """Convert a raised library error into its reportable model."""
    kind: ErrorKind = "internal"
    for cls, name in _KINDS:
        if isinstance(exc, cls):
            kind = name
            break
    details: dict[str, str | int | float | None] = {}
    if isinstance(exc, ParameterError):
        details = {"field": exc.field, "index": exc.index}
    elif isinstance(exc, PoleError):
        details = {"point": str(exc.point)}
    elif isinstance(exc, ConvergenceError):
        details = {"last_ratio": exc.last_ratio}
    elif isinstance(exc, ResonanceError):
        details = {"order": exc.order}
    elif isinstance(exc, BranchCollisionError):
        details = {"position": str(exc.position)}
    elif isinstance(exc, DegenerateBasisError):
        details = {"condition_number": exc.condition_number}
    return NumericDomainError(kind=kind, message=str(exc), details=details)
