"""
Проверочные наборы: отображение усреднения S, сплетение p и rho_{d=s},
соотношения DAHA в обоих представлениях и вспомогательные тождества.

Каждый набор строит список независимых случаев, вычисляет их (при WORKERS > 1 -
в пуле процессов) и сворачивает результаты в CheckReport в порядке случаев.
"""
import itertools
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from algebra_models.errors import AlgebraError, DomainError
from algebra_models.laurent import LaurentPoly
from algebra_models.permutation import Permutation
from algebra_models.scalars import S, hbar
from algebra_models.skein_element import SkeinElement
from algebra_models.words import GeneratorLetter, GeneratorWord, RelationPair, relation_table, sigma, y
from core import settings
from dto.check_dto import CheckReport, Counterexample, SuiteSizes, SuiteSummary
from representation_models.polyrep import PolynomialRepModel, p_word
from representation_models.skein_rep import (
    SkeinRepModel,
    commutation_rule,
    monomial_letters,
    push_sigma_past_monomial,
    rho_sigma,
    rho_sigma_base,
    rho_sigma_inv,
    rho_word,
    rho_y1,
    substitute_d_eq_s_elem,
)
from verification_models import samples

logger = logging.getLogger(__name__)

REPRESENTATIONS = {"poly": PolynomialRepModel, "skein": SkeinRepModel}
SUITES = ("relations", "intertwiner", "subrep", "averaging", "example", "crossing", "inverses", "division", "push")

Outcome = Optional[Counterexample]


def representation(name: str, kappa: int):
    try:
        return REPRESENTATIONS[name](kappa)
    except KeyError:
        raise DomainError(f"unknown representation {name!r}, expected one of {sorted(REPRESENTATIONS)}")


def averaging_S(f: LaurentPoly) -> SkeinElement:
    """
    Отображение усреднения S: X^n -> sum_{sigma in S_kappa} (a^n, sigma)

    Args:
        f: многочлен Лорана, коэффициенты которого не содержат d

    Returns:
        element: сумма по всем kappa! перестановкам с тем же коэффициентом
    """
    perms = Permutation.all(f.rank)
    terms = {}
    for exps, coeff in f.items():
        if not coeff.d_free():
            raise DomainError(f"averaging map is undefined on coefficient {coeff} (contains d)")
        for perm in perms:
            terms[(exps, perm)] = coeff
    return SkeinElement(f.rank, terms)


def default_sizes(kappa: int) -> SuiteSizes:
    """Размеры наборов по умолчанию: с ростом kappa кубы показателей сужаются"""
    if kappa <= 3:
        poly_bound, skein_bound, intertwiner_bound = 3, 2, 2
    elif kappa == 4:
        poly_bound, skein_bound, intertwiner_bound = 2, 1, 1
    else:
        poly_bound, skein_bound, intertwiner_bound = 1, 0, 0
    if kappa <= 2:
        words, length = 200, 6
    elif kappa == 3:
        words, length = 50, 4
    else:
        words, length = 10, 3
    subrep_words, subrep_length = (100, 5) if kappa <= 3 else (10, 3)
    return SuiteSizes(
        poly_bound=poly_bound,
        skein_bound=skein_bound,
        intertwiner_bound=intertwiner_bound,
        words=words,
        word_length=length,
        subrep_words=subrep_words,
        subrep_length=subrep_length,
        division_cases=1000 if kappa <= 4 else 200,
        push_cases=500 if kappa <= 3 else 100,
        inverse_cases=200 if kappa <= 3 else 20,
    )


# ===== вычисление случаев =====


def _failure(word, value, lhs=None, rhs=None, error: Optional[str] = None) -> Counterexample:
    return Counterexample(
        word=str(word),
        input=str(value),
        lhs=None if lhs is None else str(lhs),
        rhs=None if rhs is None else str(rhs),
        error=error,
    )


def _compare(word, value, lhs, rhs) -> Outcome:
    return None if lhs == rhs else _failure(word, value, lhs, rhs)


def _guarded(fn: Callable[[tuple], Outcome]) -> Callable[[tuple], Outcome]:
    """Ошибка арифметики в одном случае превращается в контрпример, набор продолжается"""

    def run(case: tuple) -> Outcome:
        try:
            return fn(case)
        except AlgebraError as e:
            logger.error("arithmetic error in %s on case %r: %s", fn.__name__, case, e)
            return _failure(case[0], case[1], error=f"{type(e).__name__}: {e}")

    run.__name__ = fn.__name__
    return run


def intertwiner_case(case: Tuple[GeneratorWord, LaurentPoly]) -> Outcome:
    word, f = case
    lhs = averaging_S(p_word(word, f))
    rhs = substitute_d_eq_s_elem(rho_word(word, averaging_S(f)))
    return _compare(word, f, lhs, rhs)


def relation_case(case: Tuple[RelationPair, str, object]) -> Outcome:
    relation, rep_name, element = case
    rep = representation(rep_name, relation.kappa)
    lhs = rep.act_combination(relation.lhs, element)
    rhs = rep.act_combination(relation.rhs, element)
    return _compare(relation, element, lhs, rhs)


def subrep_case(case: Tuple[GeneratorWord, LaurentPoly]) -> Outcome:
    word, f = case
    image = substitute_d_eq_s_elem(rho_word(word, averaging_S(f)))
    if image.is_permutation_uniform():
        return None
    return _failure(word, f, image, "element of W")


def averaging_case(case: Tuple[int, Permutation]) -> Outcome:
    i, perm = case
    origin = (0,) * perm.kappa
    pair = SkeinElement.basis(origin, perm) + SkeinElement.basis(origin, perm.compose_right(i))
    lhs = substitute_d_eq_s_elem(rho_sigma(i, pair))
    return _compare(sigma(i), pair, lhs, pair.scale(S))


def crossing_case(case: Tuple[int, Permutation]) -> Outcome:
    """sigma_i^2 = hbar sigma_i + 1 на (1, sigma) при общем d"""
    i, perm = case
    base = SkeinElement.basis((0,) * perm.kappa, perm)
    once = rho_sigma(i, base)
    lhs = rho_sigma(i, once)
    rhs = once.scale(hbar()) + base
    return _compare(f"s{i} * s{i}", base, lhs, rhs)


def inverse_case(case: Tuple[GeneratorLetter, str, object]) -> Outcome:
    letter, rep_name, element = case
    kappa = element.rank if isinstance(element, LaurentPoly) else element.kappa
    rep = representation(rep_name, kappa)
    word = GeneratorWord(kappa, (letter, letter.inverse()))
    return _compare(word, element, rep.act(word, element), element)


def division_case(case: Tuple[int, LaurentPoly]) -> Outcome:
    i, f = case
    numerator = f.apply_tau(i) - f
    quotient = numerator.exact_divide(i)
    return _compare(f"(tau{i} - 1)", f, quotient * LaurentPoly.divisor(f.rank, i), numerator)


def push_oracle(i: int, letters: Sequence[Tuple[int, int]], perm: Permutation) -> SkeinElement:
    """
    sigma_i . (x_{j1}^{e1} ... x_{jm}^{em} . (1, sigma)) буква за буквой:
    sigma_i (L w) = f_L (sigma_i w) + g_L w, где sigma_i L = f_L sigma_i + g_L
    """
    kappa = perm.kappa
    if not letters:
        return rho_sigma_base(i, perm)
    (j, power), rest = letters[0], letters[1:]
    exps = [0] * kappa
    for k, e in rest:
        exps[k - 1] += e
    letter_f, letter_g = commutation_rule(i, j, power, kappa)
    tail = SkeinElement.basis(exps, perm)
    return push_oracle(i, rest, perm).multiply_polynomial(letter_f) + tail.multiply_polynomial(letter_g)


def push_case(case: Tuple[int, Tuple[int, ...], Permutation]) -> Outcome:
    i, n, perm = case
    kappa = perm.kappa
    base = SkeinElement.basis((0,) * kappa, perm)
    expected = rho_sigma(i, SkeinElement.basis(n, perm))
    reversed_order = tuple(range(kappa, 0, -1))
    label = f"s{i} * a^{list(n)}"
    for order in (None, reversed_order):
        oracle = push_oracle(i, monomial_letters(n, order), perm)
        if oracle != expected:
            return _failure(label, base, expected, oracle)
        f, g = push_sigma_past_monomial(i, n, order)
        pushed = rho_sigma_base(i, perm).multiply_polynomial(f) + base.multiply_polynomial(g)
        if pushed != expected:
            return _failure(label, base, expected, pushed)
    return None


# ===== сборка отчётов =====


def evaluate_cases(fn: Callable[[tuple], Outcome], cases: Sequence[tuple], workers: Optional[int] = None) -> List[Outcome]:
    """
    Вычисление независимых случаев с сохранением их порядка

    Args:
        fn: функция случая уровня модуля (должна сериализоваться для пула процессов)
        cases: список случаев
        workers: число процессов (по умолчанию settings.WORKERS)
    """
    workers = workers or settings.WORKERS
    guarded = _guarded(fn)
    if workers <= 1 or len(cases) < 2:
        return [guarded(case) for case in cases]
    chunksize = max(1, len(cases) // (workers * 4))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_guarded, [fn] * len(cases), cases, chunksize=chunksize))


def _run_guarded(fn: Callable[[tuple], Outcome], case: tuple) -> Outcome:
    return _guarded(fn)(case)


def build_report(label: str, kappa: int, outcomes: Sequence[Outcome], seed: Optional[int] = None) -> CheckReport:
    failures = [outcome for outcome in outcomes if outcome is not None]
    for failure in failures:
        logger.warning("%s (kappa=%d): failure on %s applied to %s", label, kappa, failure.word, failure.input)
    report = CheckReport(
        label=label,
        kappa=kappa,
        cases=len(outcomes),
        failures=len(failures),
        seed=seed,
        counterexample=failures[0] if failures else None,
    )
    logger.info("%s (kappa=%d): %d cases, %d failures", label, kappa, report.cases, report.failures)
    return report


def check_intertwiner(
    kappa: int,
    words: Sequence[GeneratorWord],
    monomials: Sequence[LaurentPoly],
    seed: Optional[int] = None,
    workers: Optional[int] = None,
) -> CheckReport:
    """S(p(h, f)) = rho_{d=s}(h, S(f)) на всех парах (h, f) из words x monomials"""
    cases = [(word, f) for word in words for f in monomials]
    return build_report("intertwiner", kappa, evaluate_cases(intertwiner_case, cases, workers), seed)


def check_intertwiner_pairs(
    kappa: int,
    pairs: Sequence[Tuple[GeneratorWord, LaurentPoly]],
    label: str = "intertwiner",
    seed: Optional[int] = None,
    workers: Optional[int] = None,
) -> CheckReport:
    return build_report(label, kappa, evaluate_cases(intertwiner_case, list(pairs), workers), seed)


def check_relations(
    kappa: int, rep: str, test_inputs: Sequence[object], seed: Optional[int] = None, workers: Optional[int] = None
) -> List[CheckReport]:
    """
    Соотношения (1)-(9) как операторные тождества в выбранном представлении

    Returns:
        reports: по одному отчёту на номер соотношения, имеющего экземпляры при данном kappa
    """
    representation(rep, kappa)
    relations = relation_table(kappa)
    cases = [(relation, rep, element) for relation in relations for element in test_inputs]
    outcomes = evaluate_cases(relation_case, cases, workers)
    grouped: Dict[int, List[Outcome]] = {}
    for (relation, _, _), outcome in zip(cases, outcomes):
        grouped.setdefault(relation.label, []).append(outcome)
    return [build_report(f"relations/{rep}/({label})", kappa, grouped[label], seed) for label in sorted(grouped)]


def check_subrep_closure(
    kappa: int,
    words: Sequence[GeneratorWord],
    monomials: Sequence[LaurentPoly],
    seed: Optional[int] = None,
    workers: Optional[int] = None,
) -> CheckReport:
    """Образ rho_{d=s} на симметризованных элементах лежит в W для каждого слова и каждого одночлена"""
    cases = list(itertools.product(words, monomials))
    return build_report("subrep", kappa, evaluate_cases(subrep_case, cases, workers), seed)


def check_averaging(kappa: int, workers: Optional[int] = None) -> CheckReport:
    """sigma_i ((1,sigma) + (1,sigma_i sigma)) = s ((1,sigma) + (1,sigma_i sigma)) при d = s"""
    cases = [(i, perm) for perm in Permutation.all(kappa) for i in range(1, kappa)]
    return build_report("averaging", kappa, evaluate_cases(averaging_case, cases, workers))


def check_crossing_cases(kappa: int, workers: Optional[int] = None) -> CheckReport:
    cases = [(i, perm) for perm in Permutation.all(kappa) for i in range(1, kappa)]
    return build_report("crossing", kappa, evaluate_cases(crossing_case, cases, workers))


def check_worked_example() -> CheckReport:
    """kappa = 2: (sigma_1 y_1) . (a_1^2 a_2^-1, sigma_1) = c^4 (a_1^-1 a_2^2, e) и промежуточное y_1-значение"""
    kappa = 2
    start = SkeinElement.parse("(a1^2*a2^-1,[2 1])", kappa)
    target = SkeinElement.parse("c^4*(a1^-1*a2^2,[1 2])", kappa)
    word = GeneratorWord.parse("s1*y1", kappa)
    outcomes: List[Outcome] = []
    try:
        outcomes.append(_compare(word, start, rho_word(word, start), target))
        intermediate = rho_sigma_inv(1, target)
        outcomes.append(_compare(GeneratorWord(kappa, (y(1),)), start, rho_y1(start), intermediate))
    except AlgebraError as e:
        logger.error("worked example failed: %s", e)
        outcomes.append(_failure(word, start, error=f"{type(e).__name__}: {e}"))
    return build_report("example", kappa, outcomes)


def check_inverses(
    kappa: int, count: int, seed: int = 0, workers: Optional[int] = None
) -> List[CheckReport]:
    """sigma_i sigma_i^-1, sigma_i^-1 sigma_i, y_1 y_1^-1, y_1^-1 y_1 на случайных элементах обоих представлений"""
    rng = random.Random(seed)
    letters = [sigma(i, e) for i in range(1, kappa) for e in (1, -1)] + [y(1), y(1, -1)]
    reports = []
    for rep in ("poly", "skein"):
        cases = []
        for _ in range(count):
            if rep == "poly":
                element = samples.random_laurent(rng, kappa, max_terms=3, bound=2, d_free=False)
            else:
                element = samples.random_skein_element(rng, kappa, max_terms=3, bound=2)
            cases.append((rng.choice(letters), rep, element))
        reports.append(build_report(f"inverses/{rep}", kappa, evaluate_cases(inverse_case, cases, workers), seed))
    return reports


def check_division(kappa: int, count: int, seed: int = 0, workers: Optional[int] = None) -> CheckReport:
    """(tau_i - 1) f делится нацело на X_i X_{i+1}^-1 - 1 и умножение обратно восстанавливает делимое"""
    rng = random.Random(seed)
    cases = []
    if kappa >= 2:
        for _ in range(count):
            cases.append((rng.randint(1, kappa - 1), samples.random_laurent(rng, kappa, d_free=False)))
    return build_report("division", kappa, evaluate_cases(division_case, cases, workers), seed)


def check_push_oracle(kappa: int, count: int, seed: int = 0, workers: Optional[int] = None) -> CheckReport:
    """Перенос sigma_i через a^n против побуквенного действия, в двух порядках разложения a^n"""
    rng = random.Random(seed)
    cases = []
    if kappa >= 2:
        for _ in range(count):
            i = rng.randint(1, kappa - 1)
            n = samples.random_exponents(rng, kappa, 3)
            cases.append((i, n, samples.random_permutation(rng, kappa)))
    return build_report("push", kappa, evaluate_cases(push_case, cases, workers), seed)


# ===== оркестрация =====


def _intertwiner_suite(kappa: int, seed: int, sizes: SuiteSizes, workers: Optional[int]) -> List[CheckReport]:
    box = samples.box_monomials(kappa, -sizes.intertwiner_bound, sizes.intertwiner_bound)
    generators = check_intertwiner(kappa, samples.single_generator_words(kappa), box, seed, workers)
    generators = generators.model_copy(update={"label": "intertwiner/generators"})
    rng = random.Random(seed)
    pairs = []
    for _ in range(sizes.words):
        word = samples.random_word(rng, kappa, sizes.word_length)
        for f in samples.random_monomials(rng, kappa, sizes.monomials_per_word, sizes.monomial_bound):
            pairs.append((word, f))
    words = check_intertwiner_pairs(kappa, pairs, "intertwiner/words", seed, workers)
    return [generators, words]


def _subrep_suite(kappa: int, seed: int, sizes: SuiteSizes, workers: Optional[int]) -> List[CheckReport]:
    rng = random.Random(seed)
    words = [samples.random_word(rng, kappa, sizes.subrep_length) for _ in range(sizes.subrep_words)]
    monomials = samples.random_monomials(rng, kappa, sizes.monomials_per_word, sizes.monomial_bound)
    return [check_subrep_closure(kappa, words, monomials, seed, workers)]


def _relations_suite(kappa: int, seed: int, sizes: SuiteSizes, workers: Optional[int]) -> List[CheckReport]:
    poly_inputs = samples.box_monomials(kappa, -sizes.poly_bound, sizes.poly_bound)
    skein_inputs = samples.box_basis_elements(kappa, -sizes.skein_bound, sizes.skein_bound)
    return check_relations(kappa, "poly", poly_inputs, seed, workers) + check_relations(
        kappa, "skein", skein_inputs, seed, workers
    )


def run_suite(
    suite: str, kappa: int, seed: int = 0, sizes: Optional[SuiteSizes] = None, workers: Optional[int] = None
) -> SuiteSummary:
    """
    Запуск набора (или всех наборов) и сводка

    Args:
        suite: одно из SUITES или "all"
        kappa: число нитей
        seed: зерно генератора случайных слов и элементов
        sizes: размеры наборов (по умолчанию default_sizes(kappa))
        workers: число процессов

    Returns:
        summary: SuiteSummary с отчётами в фиксированном порядке
    """
    if suite != "all" and suite not in SUITES:
        raise DomainError(f"unknown suite {suite!r}, expected one of {', '.join(SUITES + ('all',))}")
    sizes = sizes or default_sizes(kappa)
    selected = SUITES if suite == "all" else (suite,)
    started = time.perf_counter()
    reports: List[CheckReport] = []
    for name in selected:
        logger.info("running suite %s (kappa=%d, seed=%d)", name, kappa, seed)
        if name == "relations":
            reports += _relations_suite(kappa, seed, sizes, workers)
        elif name == "intertwiner":
            reports += _intertwiner_suite(kappa, seed, sizes, workers)
        elif name == "subrep":
            reports += _subrep_suite(kappa, seed, sizes, workers)
        elif name == "averaging":
            reports.append(check_averaging(kappa, workers))
        elif name == "example":
            reports.append(check_worked_example())
        elif name == "crossing":
            reports.append(check_crossing_cases(kappa, workers))
        elif name == "inverses":
            reports += check_inverses(kappa, sizes.inverse_cases, seed, workers)
        elif name == "division":
            reports.append(check_division(kappa, sizes.division_cases, seed, workers))
        elif name == "push":
            reports.append(check_push_oracle(kappa, sizes.push_cases, seed, workers))
    return SuiteSummary(
        suite=suite,
        kappa=kappa,
        seed=seed,
        sizes=sizes,
        reports=reports,
        cases=sum(report.cases for report in reports),
        failures=sum(report.failures for report in reports),
        elapsed=time.perf_counter() - started,
    )
