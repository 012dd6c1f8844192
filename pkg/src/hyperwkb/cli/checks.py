"""Verification checks and their thread-pool runner."""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from hyperwkb.cli.models import CheckReport, CheckRow, finite_or_none
from hyperwkb.core.domain_errors import CheckFailure, to_domain_error
from hyperwkb.core.errors import HyperwkbError
from hyperwkb.core.result import Err, Ok, Result, fold

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20240611

Measurement = tuple[float, str]
CheckResult = Result[CheckReport, CheckFailure]


@dataclass(frozen=True, slots=True)
class CheckContext:
    qmax: int = 7
    seed: int | None = None

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(DEFAULT_SEED if self.seed is None else self.seed)


@dataclass(frozen=True, slots=True)
class Check:
    """A named measurement that passes when its deviation is at most tolerance."""

    name: str
    suite: str
    tolerance: float
    measure: Callable[[CheckContext], Measurement]


def _raised(check: Check, note: str) -> CheckResult:
    return Err(
        CheckFailure(check=check.name, deviation=math.inf, tolerance=check.tolerance, note=note)
    )


def run_check(check: Check, ctx: CheckContext) -> CheckResult:
    """Measure one check; an exception becomes a failure and never escapes."""
    try:
        deviation, note = check.measure(ctx)
    except HyperwkbError as e:
        err = to_domain_error(e)
        logger.warning(f"check {check.name} raised {err.kind}: {e}")
        return _raised(check, f"{err.kind}: {err.message}")
    except Exception as e:
        logger.exception(f"check {check.name} crashed")
        return _raised(check, f"{type(e).__name__}: {e}")
    if not deviation <= check.tolerance:
        logger.warning(
            f"check {check.name}: deviation {deviation:.3e} exceeds {check.tolerance:.1e}"
        )
        return Err(
            CheckFailure(
                check=check.name, deviation=deviation, tolerance=check.tolerance, note=note
            )
        )
    logger.debug(f"check {check.name}: deviation {deviation:.3e}")
    return Ok(
        CheckReport(
            check=check.name,
            suite=check.suite,
            deviation=deviation,
            tolerance=check.tolerance,
            note=note,
        )
    )


def run_checks(
    checks: Sequence[Check], ctx: CheckContext, threads: int = 1
) -> list[tuple[Check, CheckResult]]:
    """Run checks on up to threads workers; the output is sorted by check name."""
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        results = list(pool.map(lambda c: run_check(c, ctx), checks))
    pairs = sorted(zip(checks, results, strict=True), key=lambda cr: cr[0].name)
    return pairs


def to_row(check: Check, result: CheckResult) -> CheckRow:
    return fold(
        result,
        lambda r: CheckRow(
            check=r.check,
            suite=r.suite,
            passed=True,
            deviation=finite_or_none(r.deviation),
            tolerance=r.tolerance,
            note=r.note,
        ),
        lambda f: CheckRow(
            check=f.check,
            suite=check.suite,
            passed=False,
            deviation=finite_or_none(f.deviation),
            tolerance=f.tolerance,
            note=f.note,
        ),
    )
