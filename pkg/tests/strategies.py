"""
Стратегии hypothesis для скаляров, многочленов Лорана, элементов PR_kappa и слов
"""
import os
import sys

from hypothesis import strategies as st

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from algebra_models.laurent import LaurentPoly
from algebra_models.permutation import Permutation
from algebra_models.scalars import ScalarPoly
from algebra_models.skein_element import SkeinElement
from algebra_models.words import GeneratorWord, sigma, x, y

small = st.integers(min_value=-2, max_value=2)
nonzero = st.integers(min_value=-3, max_value=3).filter(lambda v: v != 0)


@st.composite
def scalars(draw, with_d=True, max_terms=3):
    keys = st.tuples(small, small, small if with_d else st.just(0))
    terms = draw(st.dictionaries(keys, nonzero, max_size=max_terms))
    return ScalarPoly(terms)


def exponents(kappa, bound=2):
    return st.tuples(*[st.integers(min_value=-bound, max_value=bound)] * kappa)


@st.composite
def laurents(draw, kappa, bound=2, max_terms=4, with_d=True):
    terms = draw(st.dictionaries(exponents(kappa, bound), scalars(with_d=with_d, max_terms=2), max_size=max_terms))
    return LaurentPoly(kappa, terms)


@st.composite
def skein_elements(draw, kappa, bound=1, max_terms=3):
    keys = st.tuples(exponents(kappa, bound), st.sampled_from(Permutation.all(kappa)))
    terms = draw(st.dictionaries(keys, scalars(max_terms=2), max_size=max_terms))
    return SkeinElement(kappa, terms)


def letters(kappa):
    choices = [sigma(i, e) for i in range(1, kappa) for e in (1, -1)]
    choices += [x(i, e) for i in range(1, kappa + 1) for e in (1, -1)]
    choices += [y(i, e) for i in range(1, kappa + 1) for e in (1, -1)]
    return st.sampled_from(choices)


@st.composite
def words(draw, kappa, max_length=4):
    return GeneratorWord(kappa, tuple(draw(st.lists(letters(kappa), max_size=max_length))))
