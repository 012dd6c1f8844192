"""Tests for domain error models."""

import pytest
from pydantic import ValidationError

from hyperwkb.core.domain_errors import (
    CheckFailure,
    NumericDomainError,
    UsageError,
    to_domain_error,
)
from hyperwkb.core.errors import (
    ConvergenceError,
    DivergenceError,
    HyperwkbError,
    ParameterError,
    PoleError,
    ResonanceError,
)


def test_usage_error_fields() -> None:
    error = UsageError(field="pfq", reason="missing ';'")
    assert error.field == "pfq"
    assert error.reason == "missing ';'"


def test_usage_error_from_dict() -> None:
    error = UsageError.model_validate({"field": "t", "reason": "not a number"})
    assert error.field == "t"


def test_check_failure_fields() -> None:
    failure = CheckFailure(check="delta2_routes", deviation=1e-3, tolerance=1e-9)
    assert failure.note == ""
    assert failure.deviation > failure.tolerance


def test_numeric_domain_error_kind_is_checked() -> None:
    with pytest.raises(ValidationError):
        NumericDomainError(kind="oops", message="x")  # type: ignore[arg-type]


class TestToDomainError:
    def test_parameter(self) -> None:
        err = to_domain_error(ParameterError("bad", field="upper", index=1))
        assert err.kind == "parameter"
        assert err.details == {"field": "upper", "index": 1}
        assert err.message == "bad"

    def test_pole(self) -> None:
        err = to_domain_error(PoleError("pole", point=-2))
        assert err.kind == "pole"
        assert err.details["point"] == "-2"

    def test_convergence(self) -> None:
        err = to_domain_error(ConvergenceError("slow", last_ratio=0.999))
        assert err.kind == "convergence"
        assert err.details["last_ratio"] == 0.999

    def test_resonance(self) -> None:
        assert to_domain_error(ResonanceError("r", order=3)).details == {"order": 3}

    def test_plain_kind(self) -> None:
        err = to_domain_error(DivergenceError("zero radius"))
        assert err.kind == "divergence"
        assert err.details == {}

    def test_base_class_is_internal(self) -> None:
        assert to_domain_error(HyperwkbError("?")).kind == "internal"
