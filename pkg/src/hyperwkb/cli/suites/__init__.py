"""Verification suites, one module per area, each exposing SUITE and CHECKS."""

from __future__ import annotations

from hyperwkb.cli.checks import Check
from hyperwkb.cli.suites import (
    closed_form,
    connection,
    frobenius,
    integral,
    lemma21,
    variations,
    wasow,
    wkb,
)
from hyperwkb.core.errors import ParameterError

SUITES: dict[str, tuple[Check, ...]] = {
    closed_form.SUITE: closed_form.CHECKS,
    integral.SUITE: integral.CHECKS,
    frobenius.SUITE: frobenius.CHECKS,
    lemma21.SUITE: lemma21.CHECKS,
    wkb.SUITE: wkb.CHECKS,
    variations.SUITE: variations.CHECKS,
    wasow.SUITE: wasow.CHECKS,
    connection.SUITE: connection.CHECKS,
}


def suite_checks(name: str) -> tuple[Check, ...]:
    """The checks of one suite, or of every suite for "all"."""
    if name == "all":
        return tuple(c for checks in SUITES.values() for c in checks)
    try:
        return SUITES[name]
    except KeyError:
        raise ParameterError(f"Unknown suite {name!r}", field="suite") from None


__all__ = ["SUITES", "suite_checks"]
