"""Tests for LogStackSolution."""

import math
from fractions import Fraction

import pytest

from hyperwkb.core.errors import ParameterError
from hyperwkb.opcore import (
    AlignedStack,
    EulerPolynomial,
    GradedSeries,
    LogStackSolution,
    MellinOperator,
    apply,
)

ONE = GradedSeries("t", 1, 0, (1, 0, 0))
ZERO = GradedSeries("t", 1, 0, (0, 0, 0))
LOG = LogStackSolution(((0, ZERO), (1, ONE)))


class TestConstruction:
    def test_requires_branches(self) -> None:
        with pytest.raises(ParameterError):
            LogStackSolution(())

    def test_requires_log_free_branch(self) -> None:
        with pytest.raises(ParameterError):
            LogStackSolution(((1, ONE),))

    def test_distinct_powers(self) -> None:
        with pytest.raises(ParameterError):
            LogStackSolution(((0, ONE), (0, ZERO)))

    def test_branches_sorted_descending(self) -> None:
        assert [j for j, _ in LOG.branches] == [1, 0]
        assert LOG.max_log_power == 1
        assert LOG.principal is ZERO
        assert LOG.branch(2) is None

    def test_from_aligned_drops_empty_log_rows(self) -> None:
        stack = AlignedStack("t", 1, 0, ((1, 2), (0, 0)))
        sol = LogStackSolution.from_aligned(stack)
        assert sol.max_log_power == 0
        assert sol.principal.coefficients == (1, 2)


class TestAligned:
    def test_common_grid(self) -> None:
        a = GradedSeries("t", 1, 0, (1, 1, 1))
        b = GradedSeries("t", 2, Fraction(1, 2), (5, 0))
        grid = LogStackSolution(((0, a), (1, b))).aligned()
        assert grid.lattice == 2
        assert grid.rows[0] == (1, 0, 1)
        assert grid.rows[1] == (0, 5, 0)


class TestCalculus:
    def test_evaluate(self) -> None:
        sol = LogStackSolution(((0, ONE), (1, ONE)))
        assert abs(sol.evaluate(math.e) - 2) < 1e-14

    def test_euler_derivative_of_log(self) -> None:
        out = LOG.apply_euler_polynomial(EulerPolynomial.identity())
        assert out.max_log_power == 0
        assert out.principal.coefficients == (1, 0, 0)

    def test_apply_matches_polynomial_action(self) -> None:
        out = apply(MellinOperator.euler(), LOG)
        assert out.principal.coefficients == (1, 0, 0)

    def test_derivative_values(self) -> None:
        values = LOG.derivative_values(2.0, 3)
        assert abs(values[0] - math.log(2)) < 1e-14
        assert abs(values[1] - 0.5) < 1e-14
        assert abs(values[2] + 0.25) < 1e-14

    def test_sum_and_scale(self) -> None:
        sol = LOG + LOG.scale(2)
        logs = sol.branch(1)
        assert logs is not None
        assert logs.coefficients == (3, 0, 0)
