"""Records emitted by the CLI."""

from __future__ import annotations

import math
from typing import Any

from pydantic import BaseModel

from hyperwkb.core.scalars import Scalar

SCHEMA = "hyperwkb/1"

ComplexPair = tuple[float, float]


def pair(z: Scalar) -> ComplexPair:
    """Complex numbers travel as [re, im]."""
    zc = complex(z)
    return (zc.real, zc.imag)


def finite_or_none(x: float) -> float | None:
    return x if math.isfinite(x) else None


class CheckReport(BaseModel, frozen=True):
    """A check whose deviation stayed within its tolerance."""

    check: str
    suite: str
    deviation: float
    tolerance: float
    note: str = ""


class EvalRecord(BaseModel, frozen=True):
    command: str
    params: str
    t: ComplexPair
    value: ComplexPair
    est_error: float
    route: str


class SeriesRecord(BaseModel, frozen=True):
    command: str
    params: str
    variable: str
    leading_exponent: str
    coefficients: list[ComplexPair]
    exact: list[str] | None = None


class ValueRecord(BaseModel, frozen=True):
    """A single evaluation with free-form metadata (wkb, mzv)."""

    command: str
    value: ComplexPair | float
    route: str
    details: dict[str, Any] = {}


class CheckRow(BaseModel, frozen=True):
    check: str
    suite: str
    passed: bool
    deviation: float | None
    tolerance: float
    note: str


class SuiteRecord(BaseModel, frozen=True):
    command: str
    suite: str
    seed: int | None
    passed: bool
    checks: list[CheckRow]


Record = EvalRecord | SeriesRecord | ValueRecord | SuiteRecord
