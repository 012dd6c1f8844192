"""Tests for Frobenius bases at 0 and 1."""

import math
from fractions import Fraction

import pytest

from hyperwkb.core.errors import IrregularSingularityError, ParameterError
from hyperwkb.frobenius import (
    frobenius_at_one,
    frobenius_at_zero,
    indicial_roots,
    zeta2_basis_at_one,
    zeta3_basis_at_one,
)
from hyperwkb.opcore import EulerPolynomial, MellinOperator, build_hypergeometric_operator
from hyperwkb.series import HyperParams, pfq_series

GAUSS = HyperParams.of([Fraction(1, 2), Fraction(1, 3)], [1])


def test_indicial_root_classes() -> None:
    roots = indicial_roots(EulerPolynomial.from_roots([0, 1, Fraction(1, 2)]))
    assert [(r.value, r.multiplicity, r.class_id, r.offset) for r in roots] == [
        (0, 1, 0, 0),
        (1, 1, 0, 1),
        (Fraction(1, 2), 1, 1, 0),
    ]


def test_double_root() -> None:
    roots = indicial_roots(EulerPolynomial.from_roots([0, 0]))
    assert len(roots) == 1
    assert roots[0].multiplicity == 2


class TestAtZero:
    def test_gauss_basis(self) -> None:
        basis = frobenius_at_zero(build_hypergeometric_operator(GAUSS), 10)
        taylor = pfq_series(GAUSS, 10).coefficients
        assert len(basis) == 2
        assert basis[0].max_log_power == 0
        assert basis[0].principal.coefficients == taylor
        logs = basis[1].branch(1)
        assert logs is not None
        assert logs.coefficients == taylor

    def test_residuals_vanish(self) -> None:
        basis = frobenius_at_zero(build_hypergeometric_operator(GAUSS), 12)
        assert max(basis.residuals()) == 0

    def test_column_opened_above_class_base(self) -> None:
        # t²u'' + t²u = 0: roots 0 and 1 share a class; the second column starts at n = 1
        op = MellinOperator.from_mapping(
            {0: EulerPolynomial.from_roots([0, 1]), 2: EulerPolynomial.constant(1)}
        )
        basis = frobenius_at_zero(op, 16)
        assert len(basis) == 2
        assert max(basis.residuals()) == 0
        cos_sol, sin_sol = basis[0].principal, basis[1].principal
        assert cos_sol.coefficients[:5] == (1, 0, Fraction(-1, 2), 0, Fraction(1, 24))
        assert sin_sol.leading_exponent == 1
        assert abs(cos_sol.evaluate(0.5) - math.cos(0.5)) < 1e-12
        assert abs(sin_sol.evaluate(0.5) - math.sin(0.5)) < 1e-12

    def test_irregular_point(self) -> None:
        # 𝒟 − t² · 𝒟² has deg P₀ < order
        op = MellinOperator.euler() - MellinOperator.polynomial(
            EulerPolynomial((0, 0, 1))
        ).left_shift(2)
        with pytest.raises(IrregularSingularityError):
            frobenius_at_zero(op, 4)


class TestAtOne:
    def test_gauss_exponents(self) -> None:
        basis = frobenius_at_one(GAUSS, 10)
        assert basis.point == "1"
        assert [r.value for r in basis.indicial_roots] == [0, Fraction(1, 6)]
        assert max(basis.residuals()) == 0

    def test_requires_balanced_parameters(self) -> None:
        with pytest.raises(ParameterError):
            frobenius_at_one(HyperParams.of([1], [2]), 4)

    def test_zeta2_equation(self) -> None:
        basis = zeta2_basis_at_one(Fraction(1, 2), 10)
        assert len(basis) == 2
        assert max(basis.residuals()) == 0

    def test_zeta3_equation(self) -> None:
        basis = zeta3_basis_at_one(0.4, 12)
        assert len(basis) == 3
        assert max(basis.residuals(12)) < 1e-10
