"""Tests for connection matching and the formal solutions at infinity."""

from fractions import Fraction

import pytest

from hyperwkb.core.errors import DegenerateBasisError, ParameterError
from hyperwkb.frobenius import (
    FrobeniusBasis,
    formal_at_infinity,
    frobenius_at_zero,
    regular_at_infinity,
    series_target,
    solve_connection,
)
from hyperwkb.opcore import (
    LogStackSolution,
    build_hypergeometric_operator,
    clear_negative_powers,
    residual_norm,
)
from hyperwkb.series import HyperParams

GAUSS = HyperParams.of([Fraction(1, 2), Fraction(1, 3)], [1])


class TestConnection:
    def test_member_of_the_basis(self) -> None:
        basis = frobenius_at_zero(build_hypergeometric_operator(GAUSS), 30)
        data = solve_connection(series_target(basis[0], reflect=False), basis, 0.3)
        assert abs(data.coefficients[0] - 1) < 1e-10
        assert abs(data.coefficients[1]) < 1e-10
        assert data.residual < 1e-12

    def test_degenerate_basis(self) -> None:
        basis = frobenius_at_zero(build_hypergeometric_operator(GAUSS), 10)
        twice = FrobeniusBasis("0", basis.operator, (basis[0], basis[0]), basis.indicial_roots)
        with pytest.raises(DegenerateBasisError):
            solve_connection(series_target(basis[0], reflect=False), twice)


class TestInfinity:
    def test_regular_family(self) -> None:
        op_w, _ = clear_negative_powers(build_hypergeometric_operator(GAUSS).invert_variable())
        family = regular_at_infinity(GAUSS, 8)
        assert [s.leading_exponent for s in family] == [Fraction(1, 2), Fraction(1, 3)]
        for s in family:
            assert s.variable == "1/t"
            assert residual_norm(op_w, LogStackSolution.from_series(s)) == 0

    def test_balanced_has_no_wkb_forms(self) -> None:
        regular, forms = formal_at_infinity(GAUSS, 4)
        assert len(regular) == 2
        assert forms == []

    def test_confluent_counts(self) -> None:
        regular, forms = formal_at_infinity(HyperParams.of([Fraction(1, 2)], [Fraction(3, 2)]), 2)
        assert len(regular) == 1
        assert len(forms) == 1

    def test_divergent_rejected(self) -> None:
        with pytest.raises(ParameterError):
            formal_at_infinity(HyperParams.of([1, 1, 1], [1]), 2)
