"""Полиномиальное представление p алгебры DAHA на многочленах Лорана"""
from algebra_models.errors import RankMismatchError, check_index
from algebra_models.laurent import LaurentPoly
from algebra_models.scalars import S, hbar
from algebra_models.words import GeneratorLetter, GeneratorWord, LetterKind, WordCombination, expand_yi


def p_x(i: int, f: LaurentPoly, power: int = 1) -> LaurentPoly:
    """x_i -> умножение на X_i (power = -1 - деление на X_i)"""
    check_index("x", i, 1, f.rank)
    exps = [0] * f.rank
    exps[i - 1] = power
    return f.shift(exps)


def p_sigma(i: int, f: LaurentPoly) -> LaurentPoly:
    """
    Оператор Демазюра-Люстига sigma_i -> s*tau_i + (s - s^-1)/(X_i X_{i+1}^-1 - 1) (tau_i - 1)

    Args:
        i: 1 <= i <= kappa-1
        f: многочлен Лорана

    Returns:
        result: s*tau_i(f) + (s - s^-1) * ((tau_i(f) - f) / (X_i X_{i+1}^-1 - 1))
    """
    check_index("sigma", i, 1, f.rank - 1)
    swapped = f.apply_tau(i)
    return swapped * S + (swapped - f).exact_divide(i) * hbar()


def p_sigma_inv(i: int, f: LaurentPoly) -> LaurentPoly:
    """sigma_i^-1 = sigma_i - (s - s^-1)"""
    return p_sigma(i, f) - f * hbar()


def p_y1(f: LaurentPoly) -> LaurentPoly:
    """y_1 -> sigma_1^-1 ... sigma_{kappa-1}^-1 omega; omega действует первым"""
    result = f.apply_omega()
    for j in range(f.rank - 1, 0, -1):
        result = p_sigma_inv(j, result)
    return result


def p_y1_inv(f: LaurentPoly) -> LaurentPoly:
    """y_1^-1 = omega^-1 sigma_{kappa-1} ... sigma_1; sigma_1 действует первым"""
    result = f
    for j in range(1, f.rank):
        result = p_sigma(j, result)
    return result.apply_omega_inv()


def p_letter(letter: GeneratorLetter, f: LaurentPoly) -> LaurentPoly:
    if letter.kind is LetterKind.X:
        return p_x(letter.index, f, letter.exponent)
    if letter.kind is LetterKind.SIGMA:
        return p_sigma(letter.index, f) if letter.exponent == 1 else p_sigma_inv(letter.index, f)
    if letter.index == 1:
        return p_y1(f) if letter.exponent == 1 else p_y1_inv(f)
    word = expand_yi(letter.index, f.rank)
    return p_word(word if letter.exponent == 1 else word.inverse(), f)


def p_word(w: GeneratorWord, f: LaurentPoly) -> LaurentPoly:
    """
    Действие слова: буквы применяются справа налево

    Args:
        w: слово
        f: многочлен, f.rank == w.kappa

    Returns:
        result: p(w, f)
    """
    if w.kappa != f.rank:
        raise RankMismatchError(f"word kappa {w.kappa} does not match rank {f.rank}")
    result = f
    for letter in reversed(w.letters):
        result = p_letter(letter, result)
    return result


def p_combination(combination: WordCombination, f: LaurentPoly) -> LaurentPoly:
    result = LaurentPoly.zero(f.rank)
    for coeff, word in combination.terms:
        result = result + p_word(word, f) * coeff
    return result


class PolynomialRepModel:
    """Полиномиальное представление как объект для проверочных наборов и CLI"""

    name = "poly"

    def __init__(self, kappa: int):
        self.kappa = kappa

    def parse_element(self, text: str) -> LaurentPoly:
        return LaurentPoly.parse(text, self.kappa)

    def format_element(self, element: LaurentPoly) -> str:
        return str(element)

    def act(self, word: GeneratorWord, element: LaurentPoly) -> LaurentPoly:
        return p_word(word, element)

    def act_combination(self, combination: WordCombination, element: LaurentPoly) -> LaurentPoly:
        return p_combination(combination, element)

    def substitute_d_eq_s(self, element: LaurentPoly) -> LaurentPoly:
        return element.substitute_d_eq_s()
