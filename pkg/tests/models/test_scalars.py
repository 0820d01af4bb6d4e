"""
Модульные тесты для кольца коэффициентов ScalarPoly
"""
import sys
import os
import pickle
from fractions import Fraction

import pytest
from hypothesis import given

# Добавляем путь к src в PYTHONPATH
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from algebra_models.errors import AlgebraError, ParseError
from algebra_models.scalars import C, D, ONE, S, ZERO, ScalarPoly, hbar, scalar_evaluate, substitute_d_eq_s
from strategies import scalars


class TestScalarArithmetic:
    """Арифметика и каноническая форма"""

    def test_hbar_square(self):
        assert hbar() * hbar() == ScalarPoly.parse("s^2 - 2 + s^-2")

    def test_cancellation_prunes_zero_terms(self):
        value = S - S
        assert value.is_zero()
        assert len(value) == 0
        assert value == 0

    def test_int_coercion(self):
        assert 2 * S + 1 == ScalarPoly({(1, 0, 0): 2, (0, 0, 0): 1})
        assert 1 - S == -(S - 1)

    def test_inverse_of_monomial(self):
        assert (C ** 2) ** -1 == ScalarPoly.monomial(0, -2, 0)
        assert S * S ** -1 == ONE

    def test_inverse_of_non_monomial_raises(self):
        with pytest.raises(AlgebraError):
            hbar() ** -1

    def test_inverse_of_non_unit_raises(self):
        with pytest.raises(AlgebraError):
            (2 * S) ** -1

    def test_non_scalar_operand_is_rejected(self):
        with pytest.raises(TypeError):
            S + "s"

    @given(scalars(), scalars(), scalars())
    def test_distributivity(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(scalars(), scalars())
    def test_substitution_is_multiplicative(self, a, b):
        assert (a * b).substitute_d_eq_s() == a.substitute_d_eq_s() * b.substitute_d_eq_s()


class TestScalarSubstitution:
    """Подстановка d = s и вычисление в точке"""

    def test_d_inverse(self):
        assert substitute_d_eq_s(D ** -1) == S ** -1

    def test_cancellation_after_substitution(self):
        assert ScalarPoly.parse("d - s").substitute_d_eq_s() == ZERO

    def test_mixed_monomial(self):
        assert str(ScalarPoly.parse("c^2*d^3").substitute_d_eq_s()) == "s^3*c^2"

    def test_d_free(self):
        assert ScalarPoly.parse("s + c^-2").d_free()
        assert not ScalarPoly.parse("s + d").d_free()

    def test_hbar_vanishes_at_one(self):
        assert scalar_evaluate(hbar(), s=1) == 0

    def test_exact_rational_value(self):
        assert ScalarPoly.parse("s - s^-1").evaluate(s=2) == Fraction(3, 2)


class TestScalarText:
    """Печать и разбор"""

    def test_print_descending_order(self):
        assert str(ScalarPoly.parse("s^-2 + s^2 - 2")) == "s^2 - 2 + s^-2"

    def test_print_zero(self):
        assert str(ZERO) == "0"

    def test_print_coefficients(self):
        assert str(ScalarPoly.parse("-3*c*d^-1")) == "-3*c*d^-1"

    def test_parse_parenthesised_power(self):
        assert ScalarPoly.parse("(s + 1)^2") == S * S + 2 * S + 1

    @pytest.mark.parametrize("text, position", [("s + ", 4), ("q", 0), ("s ^ x", 4), ("s $ c", 2)])
    def test_parse_errors_report_position(self, text, position):
        with pytest.raises(ParseError) as info:
            ScalarPoly.parse(text)
        assert info.value.position == position

    def test_negative_power_of_integer(self):
        with pytest.raises(ParseError):
            ScalarPoly.parse("2^-1")

    @given(scalars())
    def test_parse_inverts_print(self, value):
        assert ScalarPoly.parse(str(value)) == value

    def test_pickle_zero(self):
        assert pickle.loads(pickle.dumps(ZERO)) == ZERO
        assert pickle.loads(pickle.dumps(hbar())) == hbar()

    @pytest.mark.parametrize("value", [0, 1, -3, 7])
    def test_constant_hash_matches_int(self, value):
        constant = ScalarPoly.constant(value)
        assert constant == value
        assert hash(constant) == hash(value)
        assert {value: "key"}[constant] == "key"

    @given(scalars())
    def test_equal_values_hash_equal(self, value):
        copy = ScalarPoly.parse(str(value))
        assert hash(copy) == hash(value)
