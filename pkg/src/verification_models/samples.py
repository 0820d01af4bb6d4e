"""Детерминированные генераторы тестовых данных для проверочных наборов"""
import itertools
import random
from typing import List, Sequence, Tuple

from algebra_models.laurent import LaurentPoly
from algebra_models.permutation import Permutation
from algebra_models.scalars import ScalarPoly
from algebra_models.skein_element import SkeinElement
from algebra_models.words import GeneratorLetter, GeneratorWord, sigma, x, y


def generator_alphabet(kappa: int) -> List[GeneratorLetter]:
    """Буквы sigma_i^±1, x_i^±1, y_1^±1, из которых строятся случайные слова"""
    letters: List[GeneratorLetter] = []
    for i in range(1, kappa):
        letters += [sigma(i), sigma(i, -1)]
    for i in range(1, kappa + 1):
        letters += [x(i), x(i, -1)]
    letters += [y(1), y(1, -1)]
    return letters


def single_generator_words(kappa: int) -> List[GeneratorWord]:
    """Все однобуквенные слова: sigma_i^±1, x_i^±1, y_i^±1"""
    letters: List[GeneratorLetter] = []
    for i in range(1, kappa):
        letters += [sigma(i), sigma(i, -1)]
    for i in range(1, kappa + 1):
        letters += [x(i), x(i, -1), y(i), y(i, -1)]
    return [GeneratorWord(kappa, (letter,)) for letter in letters]


def random_word(rng: random.Random, kappa: int, max_length: int) -> GeneratorWord:
    alphabet = generator_alphabet(kappa)
    length = rng.randint(1, max(1, max_length))
    return GeneratorWord(kappa, tuple(rng.choice(alphabet) for _ in range(length)))


def random_words(seed: int, kappa: int, count: int, max_length: int) -> List[GeneratorWord]:
    rng = random.Random(seed)
    return [random_word(rng, kappa, max_length) for _ in range(count)]


def box_exponents(kappa: int, low: int, high: int) -> List[Tuple[int, ...]]:
    """Все векторы показателей из [low, high]^kappa"""
    return list(itertools.product(range(low, high + 1), repeat=kappa))


def box_monomials(kappa: int, low: int, high: int) -> List[LaurentPoly]:
    return [LaurentPoly.monomial(exps) for exps in box_exponents(kappa, low, high)]


def box_basis_elements(kappa: int, low: int, high: int) -> List[SkeinElement]:
    """Базисные пары (a^n, sigma) для всех n из куба и всех sigma из S_kappa"""
    perms = Permutation.all(kappa)
    return [SkeinElement.basis(exps, perm) for exps in box_exponents(kappa, low, high) for perm in perms]


def random_exponents(rng: random.Random, kappa: int, bound: int) -> Tuple[int, ...]:
    return tuple(rng.randint(-bound, bound) for _ in range(kappa))


def random_monomials(rng: random.Random, kappa: int, count: int, bound: int) -> List[LaurentPoly]:
    return [LaurentPoly.monomial(random_exponents(rng, kappa, bound)) for _ in range(count)]


def random_scalar(rng: random.Random, max_terms: int = 4, bound: int = 3) -> ScalarPoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        key = (rng.randint(-bound, bound), rng.randint(-bound, bound), rng.randint(-bound, bound))
        terms[key] = terms.get(key, 0) + rng.choice([-3, -2, -1, 1, 2, 3])
    return ScalarPoly(terms)


def random_laurent(
    rng: random.Random, kappa: int, max_terms: int = 8, bound: int = 4, d_free: bool = True
) -> LaurentPoly:
    """
    Случайный многочлен Лорана

    Args:
        rng: генератор
        kappa: ранг
        max_terms: не более стольких одночленов
        bound: показатели X_i из [-bound, bound]
        d_free: коэффициенты без d (область определения S)
    """
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        coeff = random_scalar(rng, max_terms=2, bound=2)
        if d_free:
            coeff = coeff.substitute_d_eq_s()
        terms[random_exponents(rng, kappa, bound)] = coeff
    return LaurentPoly(kappa, terms)


def random_skein_element(rng: random.Random, kappa: int, max_terms: int = 4, bound: int = 2) -> SkeinElement:
    perms = Permutation.all(kappa)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        key = (random_exponents(rng, kappa, bound), rng.choice(perms))
        terms[key] = random_scalar(rng, max_terms=2, bound=2)
    return SkeinElement(kappa, terms)


def random_permutation(rng: random.Random, kappa: int) -> Permutation:
    images: Sequence[int] = rng.sample(range(1, kappa + 1), kappa)
    return Permutation(tuple(images))
