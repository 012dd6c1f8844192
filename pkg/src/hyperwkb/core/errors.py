"""Exception hierarchy for unexpected numeric failures."""

from __future__ import annotations


class HyperwkbError(Exception):
    """Base exception for all library errors."""


class ParameterError(HyperwkbError):
    """Invalid or out-of-domain parameter."""

    def __init__(self, message: str, field: str, index: int | None = None) -> None:
        super().__init__(message)
        self.field = field
        self.index = index


class PoleError(HyperwkbError):
    """Evaluation at a pole of Gamma or digamma."""

    def __init__(self, message: str, point: complex) -> None:
        super().__init__(message)
        self.point = point


class DivergenceError(HyperwkbError):
    """Series diverges for the requested kind or argument."""


class ConvergenceError(HyperwkbError):
    """Iteration budget exhausted before the tolerance was met."""

    def __init__(self, message: str, last_ratio: float | None = None) -> None:
        super().__init__(message)
        self.last_ratio = last_ratio


class ResonanceError(HyperwkbError):
    """Triangular recurrence hit a resonant lattice point."""

    def __init__(self, message: str, order: int) -> None:
        super().__init__(message)
        self.order = order


class IrregularSingularityError(HyperwkbError):
    """Indicial polynomial degree is below the operator order; use the wkb module."""


class LatticeError(HyperwkbError):
    """Series or operators live on incompatible variables or exponent lattices."""


class LogPowerError(HyperwkbError):
    """Log power exceeds the cap set by the operator order."""


class BranchCollisionError(HyperwkbError):
    """Root branches collided while tracking along a path."""

    def __init__(self, message: str, position: complex) -> None:
        super().__init__(message)
        self.position = position


class DominanceError(HyperwkbError):
    """No WKB branch strictly dominates at the evaluation point."""


class DegenerateBasisError(HyperwkbError):
    """Connection system is singular at the matching point."""

    def __init__(self, message: str, condition_number: float) -> None:
        super().__init__(message)
        self.condition_number = condition_number
