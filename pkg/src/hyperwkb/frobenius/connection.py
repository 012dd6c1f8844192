"""Connection coefficients by matching values and derivatives at one point."""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np

from hyperwkb.core.errors import DegenerateBasisError
from hyperwkb.frobenius.local import FrobeniusBasis
from hyperwkb.opcore.logstack import LogStackSolution

logger = logging.getLogger(__name__)

DerivativeTarget = Callable[[complex, int], Sequence[complex]]

DEFAULT_MATCHING_POINT = 0.5
MAX_CONDITION = 1e13


@dataclass(frozen=True, slots=True)
class ConnectionData:
    """Coefficients c with target = Σ c_i basis_i near the matching point."""

    coefficients: tuple[complex, ...]
    matching_point: complex
    condition_number: float
    residual: float


def series_target(sol: LogStackSolution, *, reflect: bool = True) -> DerivativeTarget:
    """Target from a solution in t, evaluated at t = 1 − x when reflect (d/dx = −d/dt)."""

    def target(x: complex, count: int) -> list[complex]:
        if not reflect:
            return sol.derivative_values(x, count)
        values = sol.derivative_values(1.0 - x, count)
        return [(-1) ** k * v for k, v in enumerate(values)]

    return target


def solve_connection(
    target: DerivativeTarget,
    basis: FrobeniusBasis,
    matching_point: complex = DEFAULT_MATCHING_POINT,
) -> ConnectionData:
    """Solve Σ c_i u_i^{(k)}(x₀) = f^{(k)}(x₀) for k < len(basis)."""
    n = len(basis)
    x0 = complex(matching_point)
    mat = np.array([sol.derivative_values(x0, n) for sol in basis.solutions], dtype=complex).T
    rhs = np.array(target(x0, n), dtype=complex)
    cond = float(np.linalg.cond(mat))
    if not np.isfinite(cond) or cond > MAX_CONDITION:
        raise DegenerateBasisError(
            f"basis is degenerate at {x0} (condition {cond:.3e})", condition_number=cond
        )
    coeffs = np.linalg.solve(mat, rhs)
    scale = max(1.0, float(np.max(np.abs(rhs))))
    residual = float(np.max(np.abs(mat @ coeffs - rhs))) / scale
    logger.debug(f"solve_connection at {x0}: cond {cond:.2e}, residual {residual:.2e}")
    return ConnectionData(tuple(complex(c) for c in coeffs), x0, cond, residual)
