"""Tests for HyperParams and MZVIndex."""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from hyperwkb.core.errors import ParameterError
from hyperwkb.series import HyperParams, MZVIndex


class TestHyperParams:
    def test_kinds(self) -> None:
        assert HyperParams.of([1, 1], [2]).kind == "balanced"
        assert HyperParams.of([1], [1]).kind == "confluent"
        assert HyperParams.of([], [1, 1]).kind == "confluent"
        assert HyperParams.of([1, 1], []).kind == "divergent"
        assert HyperParams.of([-3, 0.5], [2]).kind == "polynomial"

    def test_terminating_degree(self) -> None:
        assert HyperParams.of([-3, -5], [1]).terminating_degree == 3
        assert HyperParams.of([Fraction(-2)], []).terminating_degree == 2
        assert HyperParams.of([0.5], [1]).terminating_degree is None

    def test_str(self) -> None:
        assert str(HyperParams.of([1, 1], [2])) == "2F1(1,1;2)"
        assert str(HyperParams.of([], [1])) == "0F1(;1)"

    def test_excess(self) -> None:
        excess = HyperParams.of([Fraction(1, 2), Fraction(1, 3)], [2]).excess
        assert abs(excess - 7 / 6) < 1e-15

    def test_lower_pole_rejected(self) -> None:
        with pytest.raises(ParameterError) as exc:
            HyperParams.of([1], [2, -1])
        assert exc.value.field == "lower"
        assert exc.value.index == 1

    def test_non_numbers_rejected(self) -> None:
        with pytest.raises(ParameterError):
            HyperParams.of(["a"], [])  # type: ignore[list-item]
        with pytest.raises(ParameterError):
            HyperParams.of([True], [])

    def test_frozen(self) -> None:
        params = HyperParams.of([1], [2])
        with pytest.raises(ValidationError):
            params.upper = (3,)  # type: ignore[misc]


class TestMZVIndex:
    def test_weight_and_depth(self) -> None:
        index = MZVIndex.of(2, 3, 1)
        assert index.weight == 6
        assert index.depth == 3
        assert not index.admissible
        assert str(index) == "(2,3,1)"

    def test_single_integer(self) -> None:
        assert MZVIndex(exponents=4).exponents == (4,)  # type: ignore[arg-type]

    def test_rejects_empty_and_zero(self) -> None:
        with pytest.raises(ParameterError):
            MZVIndex.of()
        with pytest.raises(ParameterError) as exc:
            MZVIndex.of(2, 0)
        assert exc.value.index == 1
