"""Расширенное полиномиальное представление rho_d алгебры DAHA на PR_kappa"""
from functools import lru_cache
from typing import Dict, Optional, Sequence, Tuple

from algebra_models.errors import RankMismatchError, check_index
from algebra_models.laurent import LaurentPoly
from algebra_models.permutation import Permutation
from algebra_models.scalars import C, D, ZERO, ScalarPoly, hbar
from algebra_models.skein_element import BasisKey, SkeinElement
from algebra_models.words import GeneratorLetter, GeneratorWord, LetterKind, WordCombination, expand_yi


def perm_compose_right(sigma_i: int, sigma: Permutation) -> Permutation:
    """sigma_i sigma в S_kappa: (sigma_i sigma)(j) = sigma(tau_i(j))"""
    return sigma.compose_right(sigma_i)


def rho_x(i: int, v: SkeinElement, power: int = 1) -> SkeinElement:
    """x_i . (a, sigma) = (a_i a, sigma)"""
    check_index("x", i, 1, v.kappa)
    result: Dict[BasisKey, ScalarPoly] = {}
    for (exps, perm), coeff in v.items():
        shifted = list(exps)
        shifted[i - 1] += power
        result[(tuple(shifted), perm)] = coeff
    return SkeinElement(v.kappa, result)


def rho_sigma_base(i: int, sigma: Permutation) -> SkeinElement:
    """
    sigma_i . (1, sigma):
        d^-1 (1, sigma_i sigma),                 если sigma(i) < sigma(i+1)
        d (1, sigma_i sigma) + hbar (1, sigma),  если sigma(i) > sigma(i+1)
    """
    check_index("sigma", i, 1, sigma.kappa - 1)
    origin = (0,) * sigma.kappa
    swapped = perm_compose_right(i, sigma)
    if sigma.ascent(i):
        return SkeinElement(sigma.kappa, {(origin, swapped): D ** -1})
    return SkeinElement(sigma.kappa, {(origin, swapped): D, (origin, sigma): hbar()})


def commutation_rule(i: int, j: int, power: int, kappa: int) -> Tuple[LaurentPoly, LaurentPoly]:
    """
    sigma_i x_j^power = f sigma_i + g для одной буквы:
        sigma_i x_i        = x_{i+1} sigma_i - hbar x_{i+1}
        sigma_i x_{i+1}    = x_i sigma_i + hbar x_{i+1}
        sigma_i x_i^-1     = x_{i+1}^-1 sigma_i + hbar x_i^-1
        sigma_i x_{i+1}^-1 = x_i^-1 sigma_i - hbar x_i^-1
        sigma_i x_j^±1     = x_j^±1 sigma_i,  j != i, i+1
    """
    h = hbar()
    if j == i and power == 1:
        var = LaurentPoly.variable(kappa, i + 1)
        return var, var * -h
    if j == i + 1 and power == 1:
        return LaurentPoly.variable(kappa, i), LaurentPoly.variable(kappa, i + 1) * h
    if j == i and power == -1:
        return LaurentPoly.variable(kappa, i + 1, -1), LaurentPoly.variable(kappa, i, -1) * h
    if j == i + 1 and power == -1:
        inverse = LaurentPoly.variable(kappa, i, -1)
        return inverse, inverse * -h
    return LaurentPoly.variable(kappa, j, power), LaurentPoly.zero(kappa)


def monomial_letters(n: Sequence[int], order: Optional[Sequence[int]] = None) -> Tuple[Tuple[int, int], ...]:
    """
    Разложение a^n на буквы (j, ±1) слева направо

    Args:
        n: вектор показателей
        order: порядок переменных (по умолчанию 1..kappa)
    """
    order = order or range(1, len(n) + 1)
    letters = []
    for j in order:
        power = n[j - 1]
        letters.extend([(j, 1 if power > 0 else -1)] * abs(power))
    return tuple(letters)


@lru_cache(maxsize=65536)
def _push(i: int, n: Tuple[int, ...], order: Optional[Tuple[int, ...]]) -> Tuple[LaurentPoly, LaurentPoly]:
    kappa = len(n)
    f = LaurentPoly.one(kappa)
    g = LaurentPoly.zero(kappa)
    # инвариант: sigma_i * (обработанный префикс) = f sigma_i + g
    for j, power in monomial_letters(n, order):
        letter_f, letter_g = commutation_rule(i, j, power, kappa)
        g = g * LaurentPoly.variable(kappa, j, power) + f * letter_g
        f = f * letter_f
    return f, g


def push_sigma_past_monomial(
    i: int, n: Sequence[int], order: Optional[Sequence[int]] = None
) -> Tuple[LaurentPoly, LaurentPoly]:
    """
    Перенос sigma_i направо через одночлен: sigma_i a^n = f sigma_i + g

    Args:
        i: 1 <= i <= kappa-1
        n: вектор показателей a^n
        order: порядок разложения одночлена на буквы

    Returns:
        (f, g): многочлены от a_1..a_kappa с коэффициентами из Z[s^±1]
    """
    check_index("sigma", i, 1, len(n) - 1)
    return _push(i, tuple(n), tuple(order) if order is not None else None)


def rho_sigma(i: int, v: SkeinElement) -> SkeinElement:
    """sigma_i . (a, sigma) = f . (sigma_i . (1, sigma)) + g . (1, sigma)"""
    check_index("sigma", i, 1, v.kappa - 1)
    result = SkeinElement.zero(v.kappa)
    origin = (0,) * v.kappa
    for (exps, perm), coeff in v.items():
        f, g = push_sigma_past_monomial(i, exps)
        moved = rho_sigma_base(i, perm).multiply_polynomial(f)
        kept = SkeinElement.basis(origin, perm).multiply_polynomial(g)
        result = result + (moved + kept).scale(coeff)
    return result


def rho_sigma_inv(i: int, v: SkeinElement) -> SkeinElement:
    """sigma_i^-1 = sigma_i - hbar"""
    return rho_sigma(i, v) - v.scale(hbar())


def rho_omega(v: SkeinElement) -> SkeinElement:
    """(a, sigma) -> c^{2 n_1} (a_kappa^n_1 a_1^n_2 ... a_{kappa-1}^n_kappa, tau_kappa sigma)"""
    result: Dict[BasisKey, ScalarPoly] = {}
    for (exps, perm), coeff in v.items():
        key = (exps[1:] + exps[:1], perm.shift())
        result[key] = result.get(key, ZERO) + coeff * C ** (2 * exps[0])
    return SkeinElement(v.kappa, result)


def rho_omega_inv(v: SkeinElement) -> SkeinElement:
    result: Dict[BasisKey, ScalarPoly] = {}
    for (exps, perm), coeff in v.items():
        key = (exps[-1:] + exps[:-1], perm.unshift())
        result[key] = result.get(key, ZERO) + coeff * C ** (-2 * exps[-1])
    return SkeinElement(v.kappa, result)


def rho_y1(v: SkeinElement) -> SkeinElement:
    """
    y_1 . (a, sigma) = c^{2 n_1} tau_kappa^-1 . (a_{tau_kappa}, tau_kappa sigma),
    tau_kappa^-1 = sigma_1^-1 ... sigma_{kappa-1}^-1 (sigma_{kappa-1}^-1 действует первым)
    """
    result = rho_omega(v)
    for j in range(v.kappa - 1, 0, -1):
        result = rho_sigma_inv(j, result)
    return result


def rho_y1_inv(v: SkeinElement) -> SkeinElement:
    result = v
    for j in range(1, v.kappa):
        result = rho_sigma(j, result)
    return rho_omega_inv(result)


def rho_letter(letter: GeneratorLetter, v: SkeinElement) -> SkeinElement:
    if letter.kind is LetterKind.X:
        return rho_x(letter.index, v, letter.exponent)
    if letter.kind is LetterKind.SIGMA:
        return rho_sigma(letter.index, v) if letter.exponent == 1 else rho_sigma_inv(letter.index, v)
    if letter.index == 1:
        return rho_y1(v) if letter.exponent == 1 else rho_y1_inv(v)
    word = expand_yi(letter.index, v.kappa)
    return rho_word(word if letter.exponent == 1 else word.inverse(), v)


def rho_word(w: GeneratorWord, v: SkeinElement) -> SkeinElement:
    """Действие слова на PR_kappa: буквы применяются справа налево"""
    if w.kappa != v.kappa:
        raise RankMismatchError(f"word kappa {w.kappa} does not match element kappa {v.kappa}")
    result = v
    for letter in reversed(w.letters):
        result = rho_letter(letter, result)
    return result


def rho_combination(combination: WordCombination, v: SkeinElement) -> SkeinElement:
    result = SkeinElement.zero(v.kappa)
    for coeff, word in combination.terms:
        result = result + rho_word(word, v).scale(coeff)
    return result


def substitute_d_eq_s_elem(v: SkeinElement) -> SkeinElement:
    return v.substitute_d_eq_s()


class SkeinRepModel:
    """Представление rho_d как объект для проверочных наборов и CLI"""

    name = "skein"

    def __init__(self, kappa: int):
        self.kappa = kappa

    def parse_element(self, text: str) -> SkeinElement:
        return SkeinElement.parse(text, self.kappa)

    def format_element(self, element: SkeinElement) -> str:
        return str(element)

    def act(self, word: GeneratorWord, element: SkeinElement) -> SkeinElement:
        return rho_word(word, element)

    def act_combination(self, combination: WordCombination, element: SkeinElement) -> SkeinElement:
        return rho_combination(combination, element)

    def substitute_d_eq_s(self, element: SkeinElement) -> SkeinElement:
        return element.substitute_d_eq_s()
