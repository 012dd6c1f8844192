"""Gauss–Jacobi rules on [0, 1]."""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from functools import lru_cache

import numpy as np
from scipy.special import roots_jacobi

from hyperwkb.core.errors import ConvergenceError, ParameterError
from hyperwkb.core.scalars import Scalar

logger = logging.getLogger(__name__)

START_NODES = 32
MAX_NODES = 1024
QUAD_TOL = 1e-11
ROUNDOFF_TOL = 1e-9
REAL_TOL = 1e-14


def real_parameter(x: Scalar, field: str) -> float:
    """x as a float; quadrature weights need real exponents."""
    z = complex(x)
    if abs(z.imag) > REAL_TOL:
        raise ParameterError(f"{field} = {x} must be real for Gauss–Jacobi weights", field=field)
    return z.real


@lru_cache(maxsize=256)
def jacobi_rule(n: int, a: float, b: float) -> tuple[np.ndarray, np.ndarray]:
    """Nodes τ_i and weights w_i with Σ w_i g(τ_i) ≈ ∫₀¹ (1−τ)^a τ^b g(τ) dτ."""
    if a <= -1.0 or b <= -1.0:
        raise ParameterError(f"weight (1−τ)^{a} τ^{b} is not integrable", field="weight")
    x, w = roots_jacobi(n, a, b)
    nodes = (x + 1.0) / 2.0
    weights = w / 2.0 ** (a + b + 1.0)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def cube_rule(exponents: list[float], n: int) -> tuple[np.ndarray, np.ndarray]:
    """Product rule for ∏(1−τ_i)^{e_i} on the unit cube: nodes (N, dim), weights (N,)."""
    rules = [jacobi_rule(n, e, 0.0) for e in exponents]
    nodes = np.meshgrid(*(r[0] for r in rules), indexing="ij")
    weights = np.meshgrid(*(r[1] for r in rules), indexing="ij")
    return (
        np.stack([g.ravel() for g in nodes], axis=1),
        np.prod(np.stack([g.ravel() for g in weights]), axis=0),
    )


def settle_by_doubling(evaluate: Callable[[int], complex], tol: float, what: str) -> complex:
    """Double the node count from START_NODES until two estimates agree to tol (relative).

    Once the change stops shrinking below ROUNDOFF_TOL the rule's own rounding dominates,
    and the estimate before the growth is returned.
    """
    n = START_NODES
    previous: complex | None = None
    last_change = math.inf
    while n <= MAX_NODES:
        value = evaluate(n)
        if previous is not None:
            change = abs(value - previous)
            scale = max(1.0, abs(value))
            if change <= tol * scale:
                logger.debug(f"{what}: {n} nodes, change {change:.2e}")
                return value
            if change >= last_change and last_change <= ROUNDOFF_TOL * scale:
                logger.debug(f"{what}: rounding floor {last_change:.2e} at {n // 2} nodes")
                return previous
            last_change = change
        previous = value
        n *= 2
    raise ConvergenceError(f"{what} not settled with {MAX_NODES} nodes")


def jacobi_integral(
    g: Callable[[np.ndarray], np.ndarray], a: float, b: float, tol: float = QUAD_TOL
) -> complex:
    """∫₀¹ (1−τ)^a τ^b g(τ) dτ, doubling the node count until it settles."""

    def estimate(n: int) -> complex:
        tau, w = jacobi_rule(n, a, b)
        return complex(np.asarray(g(tau)) @ w)

    return settle_by_doubling(estimate, tol, "Gauss–Jacobi quadrature")
