"""
Модульные тесты для Permutation и SkeinElement
"""
import sys
import os

import pytest
from hypothesis import given

# Добавляем путь к src в PYTHONPATH
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from algebra_models.errors import DomainError, ParseError, RankMismatchError
from algebra_models.laurent import LaurentPoly
from algebra_models.permutation import Permutation
from algebra_models.scalars import D, S
from algebra_models.skein_element import SkeinElement
from strategies import skein_elements

E2 = Permutation.identity(2)
SWAP = Permutation((2, 1))


def elem(text, kappa=2):
    return SkeinElement.parse(text, kappa)


class TestPermutation:
    """Перестановки в однострочной записи"""

    def test_rejects_non_bijection(self):
        with pytest.raises(DomainError):
            Permutation((1, 1))

    def test_compose_right_swaps_positions(self):
        assert E2.compose_right(1) == SWAP
        assert Permutation((2, 3, 1)).compose_right(1) == Permutation((3, 2, 1))

    def test_compose_right_is_involution(self):
        for perm in Permutation.all(3):
            assert perm.compose_right(2).compose_right(2) == perm

    def test_ascent(self):
        assert E2.ascent(1)
        assert not SWAP.ascent(1)

    def test_shift(self):
        assert SWAP.shift() == E2
        assert Permutation((1, 2, 3)).shift() == Permutation((2, 3, 1))

    def test_unshift_inverts_shift(self):
        for perm in Permutation.all(4):
            assert perm.shift().unshift() == perm

    def test_all_is_lexicographic(self):
        perms = Permutation.all(3)
        assert len(perms) == 6
        assert perms[0] == Permutation.identity(3)
        assert perms == sorted(perms)

    def test_text(self):
        assert str(Permutation((2, 3, 1))) == "[2 3 1]"
        assert Permutation.parse("[2, 3, 1]") == Permutation((2, 3, 1))


class TestSkeinElementText:
    """Печать и разбор элементов PR_kappa"""

    def test_worked_example_form(self):
        text = "c^4*(a1^-1*a2^2,[1 2])"
        assert str(elem(text)) == text

    def test_collects_equal_pairs(self):
        assert elem("(1,[2 1]) + (1, [2 1])") == SkeinElement.basis((0, 0), SWAP, 2)

    def test_order_of_terms(self):
        assert str(elem("(1,[2 1]) + (a1,[1 2]) + (1,[1 2])")) == "(a1,[1 2]) + (1,[1 2]) + (1,[2 1])"

    def test_polynomial_times_pair(self):
        assert elem("(a1 + a2)*(1,[1 2])") == elem("(a1,[1 2]) + (a2,[1 2])")

    def test_empty_is_zero(self):
        assert elem("").is_zero()

    @pytest.mark.parametrize("text", ["(a1,[1 2 3])", "(a3,[1 2])", "a1", "(1,[1 1])", "(1,[1 2]) + 1"])
    def test_invalid_text(self, text):
        with pytest.raises(ParseError):
            elem(text)

    @given(skein_elements(2))
    def test_parse_inverts_print(self, value):
        assert SkeinElement.parse(str(value), 2) == value


class TestSkeinElementAlgebra:
    """Линейные операции"""

    def test_scale_and_substitute(self):
        value = elem("d^-1*(1,[2 1])").substitute_d_eq_s()
        assert str(value) == "s^-1*(1,[2 1])"

    def test_substitution_cancels(self):
        assert elem("(d - s)*(1,[1 2])").substitute_d_eq_s().is_zero()

    def test_multiply_polynomial(self):
        value = SkeinElement.basis((1, -1), SWAP).multiply_polynomial(LaurentPoly.parse("X1^-1 + X2", 2))
        assert value == elem("(a2^-1,[2 1]) + (a1,[2 1])")

    def test_mul_dispatch(self):
        base = SkeinElement.basis((0, 0), E2)
        assert (S * base).coefficient((0, 0), E2) == S
        assert base * D == base.scale(D)

    def test_kappa_mismatch(self):
        with pytest.raises(RankMismatchError):
            SkeinElement.zero(2) + SkeinElement.zero(3)

    def test_permutation_uniform(self):
        assert elem("(a1,[1 2]) + (a1,[2 1])").is_permutation_uniform()
        assert not elem("(a1,[1 2])").is_permutation_uniform()
        assert not elem("(a1,[1 2]) + 2*(a1,[2 1])").is_permutation_uniform()
        assert SkeinElement.zero(3).is_permutation_uniform()
