"""Tests for command-line value parsing and RunConfig validation."""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from hyperwkb.cli.config import (
    RunConfig,
    parse_index,
    parse_item,
    parse_list,
    parse_pfq,
    parse_scalar,
)
from hyperwkb.core.errors import ParameterError


class TestParseItem:
    def test_integer(self) -> None:
        assert parse_item("3", "x") == 3
        assert isinstance(parse_item("-4", "x"), int)

    def test_ratio(self) -> None:
        assert parse_item("1/2", "x") == Fraction(1, 2)

    def test_float(self) -> None:
        assert parse_item("0.25", "x") == 0.25

    def test_complex_literals(self) -> None:
        assert parse_item("0.5+1j", "x") == 0.5 + 1j
        assert parse_item("2i", "x") == 2j

    def test_garbage(self) -> None:
        with pytest.raises(ParameterError) as exc:
            parse_item("abc", "pfq.upper", 1)
        assert exc.value.field == "pfq.upper"
        assert exc.value.index == 1

    def test_empty(self) -> None:
        with pytest.raises(ParameterError):
            parse_item(" ", "x")


def test_parse_list() -> None:
    assert parse_list("1, 1/3 ,0.5", "x") == (1, Fraction(1, 3), 0.5)
    assert parse_list("", "x") == ()


class TestParseScalar:
    def test_real(self) -> None:
        assert parse_scalar("0.5", "t") == 0.5

    def test_re_im(self) -> None:
        assert parse_scalar("1,2", "t") == 1 + 2j

    def test_zero_imaginary_part_keeps_the_real_value(self) -> None:
        assert parse_scalar("1/2,0", "t") == Fraction(1, 2)

    def test_too_many_parts(self) -> None:
        with pytest.raises(ParameterError):
            parse_scalar("1,2,3", "t")

    def test_complex_parts_rejected(self) -> None:
        with pytest.raises(ParameterError):
            parse_scalar("1j,2", "t")


class TestParsePfq:
    def test_gauss(self) -> None:
        params = parse_pfq("1,1;2")
        assert params.upper == (1, 1)
        assert params.lower == (2,)
        assert params.kind == "balanced"

    def test_completely_confluent(self) -> None:
        params = parse_pfq(";1,1")
        assert params.upper == ()
        assert params.lower == (1, 1)

    def test_missing_separator(self) -> None:
        with pytest.raises(ParameterError):
            parse_pfq("1,1")

    def test_two_separators(self) -> None:
        with pytest.raises(ParameterError):
            parse_pfq("1;2;3")


def test_parse_index() -> None:
    assert parse_index("2,3") == (2, 3)
    with pytest.raises(ParameterError):
        parse_index("2.5")


class TestRunConfig:
    def test_defaults(self) -> None:
        cfg = RunConfig(command="verify")
        assert cfg.output_format == "json"
        assert cfg.suite == "all"
        assert cfg.seed is None

    def test_tolerance_range(self) -> None:
        RunConfig(command="eval", tol=1e-2)
        with pytest.raises(ValidationError):
            RunConfig(command="eval", tol=0.5)
        with pytest.raises(ValidationError):
            RunConfig(command="eval", tol=0.0)

    def test_order_cap(self) -> None:
        RunConfig(command="series", order=200)
        with pytest.raises(ValidationError):
            RunConfig(command="series", order=201)

    def test_unknown_command(self) -> None:
        with pytest.raises(ValidationError):
            RunConfig(command="plot")  # type: ignore[arg-type]

    def test_frozen(self) -> None:
        cfg = RunConfig(command="mzv", index=(2,))
        with pytest.raises(ValidationError):
            cfg.index = (3,)  # type: ignore[misc]
