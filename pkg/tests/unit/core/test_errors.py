"""Tests for exception hierarchy."""

import pytest

from hyperwkb.core.errors import (
    BranchCollisionError,
    ConvergenceError,
    DegenerateBasisError,
    DivergenceError,
    DominanceError,
    HyperwkbError,
    ParameterError,
    PoleError,
    ResonanceError,
)


def test_hyperwkb_error_is_base() -> None:
    with pytest.raises(HyperwkbError):
        raise HyperwkbError("base error")


def test_divergence_error_inherits_from_base() -> None:
    with pytest.raises(HyperwkbError):
        raise DivergenceError("zero radius")


def test_dominance_error_inherits_from_base() -> None:
    with pytest.raises(HyperwkbError):
        raise DominanceError("tied branches")


def test_parameter_error_names_the_field() -> None:
    error = ParameterError("bad lower parameter", field="lower", index=2)
    assert error.field == "lower"
    assert error.index == 2
    assert "bad lower parameter" in str(error)


def test_parameter_error_index_optional() -> None:
    assert ParameterError("bad", field="t").index is None


def test_pole_error_has_point() -> None:
    error = PoleError("Gamma pole", point=-3)
    assert error.point == -3


def test_convergence_error_last_ratio_optional() -> None:
    assert ConvergenceError("slow").last_ratio is None
    assert ConvergenceError("slow", last_ratio=0.99).last_ratio == 0.99


def test_resonance_error_has_order() -> None:
    assert ResonanceError("resonant", order=4).order == 4


def test_branch_collision_has_position() -> None:
    assert BranchCollisionError("collision", position=0.5 + 0.5j).position == 0.5 + 0.5j


def test_degenerate_basis_has_condition_number() -> None:
    error = DegenerateBasisError("singular", condition_number=1e17)
    assert error.condition_number == 1e17
    assert "singular" in str(error)
