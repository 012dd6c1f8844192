"""Residues as averages over circles and tori |b_k| = r."""

from __future__ import annotations

import logging
from collections.abc import Callable

import numpy as np
from pydantic import BaseModel, Field, field_validator

from hyperwkb.core.errors import ConvergenceError

logger = logging.getLogger(__name__)

MIN_SAMPLES = 64
MAX_SAMPLES = 2**14
MAX_TORUS_SAMPLES = 256
RESIDUE_TOL = 1e-11

TorusFunction = Callable[[tuple[np.ndarray, ...]], np.ndarray]


class ContourSpec(BaseModel, frozen=True):
    """Circle |b| = radius sampled at `samples` equispaced points (the starting resolution)."""

    radius: float = Field(default=1.0, gt=0.0)
    samples: int = Field(default=MIN_SAMPLES, ge=MIN_SAMPLES)

    @field_validator("samples")
    @classmethod
    def _power_of_two(cls, value: int) -> int:
        if value & (value - 1):
            raise ValueError(f"samples must be a power of two, got {value}")
        return value


def torus_average(
    f: TorusFunction, spec: ContourSpec | None = None, dim: int = 1, tol: float = RESIDUE_TOL
) -> np.ndarray:
    """Mean of f over the torus (r·e^{iθ₁}, …, r·e^{iθ_dim}), i.e. Res f d^{dim}ln b.

    f receives one flattened coordinate array per b_k and returns values with the torus
    points on the last axis. The grid is doubled until the mean changes by less than tol.
    """
    spec = spec or ContourSpec()
    cap = MAX_SAMPLES if dim == 1 else MAX_TORUS_SAMPLES
    m = spec.samples
    previous: np.ndarray | None = None
    change = float("inf")
    while m <= cap:
        b = spec.radius * np.exp(2j * np.pi * np.arange(m) / m)
        grids = np.meshgrid(*([b] * dim), indexing="ij")
        average = np.asarray(f(tuple(g.ravel() for g in grids))).mean(axis=-1)
        if previous is not None:
            change = float(np.max(np.abs(average - previous)))
            if change <= tol * max(1.0, float(np.max(np.abs(average)))):
                return average
        previous = average
        m *= 2
    raise ConvergenceError(
        f"residue on |b| = {spec.radius} not settled with {cap} samples per circle",
        last_ratio=change,
    )


def contour_residue(
    f: Callable[[np.ndarray], np.ndarray], spec: ContourSpec | None = None
) -> complex:
    """(1/2πi)∮_{|b|=r} f(b) db by the trapezoid rule."""
    value = torus_average(lambda bs: f(bs[0]) * bs[0], spec)
    logger.debug(f"contour_residue: {complex(value):.12g}")
    return complex(value)
