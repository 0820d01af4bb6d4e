"""Элементы модуля PR_kappa = Z[a_1^±1, ..., a_kappa^±1] ⊗ Z[S_kappa] над Z[s^±1, c^±1, d^±1]"""
from typing import Callable, Dict, Iterator, Mapping, Optional, Sequence, Tuple, Union

from algebra_models.errors import AlgebraError, ParseError, RankMismatchError
from algebra_models.laurent import LaurentPoly, format_monomial, variable_resolver
from algebra_models.permutation import Permutation
from algebra_models.scalars import ZERO, ScalarPoly, format_scaled, join_terms

Exponents = Tuple[int, ...]
BasisKey = Tuple[Exponents, Permutation]


class SkeinElement:
    """
    Конечная сумма базисных пар (a_1^n_1...a_kappa^n_kappa, sigma) с коэффициентами ScalarPoly.
    Равенство - равенство канонических форм.
    """

    __slots__ = ("kappa", "_terms", "_hash")

    def __init__(self, kappa: int, terms: Optional[Mapping[BasisKey, Union[ScalarPoly, int]]] = None):
        if kappa < 1:
            raise AlgebraError(f"kappa must be positive, got {kappa}")
        clean: Dict[BasisKey, ScalarPoly] = {}
        for (exps, perm), coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != kappa or perm.kappa != kappa:
                raise RankMismatchError(f"basis pair ({exps}, {perm}) does not match kappa={kappa}")
            key = (exps, perm)
            clean[key] = clean.get(key, ZERO) + ScalarPoly.coerce(coeff)
        self.kappa = kappa
        self._terms = {key: coeff for key, coeff in clean.items() if coeff}
        self._hash = None

    # ===== конструкторы =====

    @classmethod
    def zero(cls, kappa: int) -> "SkeinElement":
        return cls(kappa)

    @classmethod
    def basis(cls, exps: Sequence[int], perm: Permutation, coeff: Union[ScalarPoly, int] = 1) -> "SkeinElement":
        return cls(perm.kappa, {(tuple(exps), perm): coeff})

    @classmethod
    def parse(cls, text: str, kappa: int) -> "SkeinElement":
        """
        Разбор записи вида "c^4*(a1^-1*a2^2,[1 2]) + (1,[2 1])"

        Args:
            text: строка
            kappa: число нитей

        Returns:
            element: SkeinElement
        """
        from algebra_models.text_parser import ExpressionParser

        def make_pair(value, images, position):
            perm = Permutation(tuple(images))
            if perm.kappa != kappa:
                raise ParseError(f"permutation {perm} does not match kappa={kappa}", position)
            if isinstance(value, SkeinElement):
                raise ParseError("nested basis pair", position)
            return LaurentPoly.coerce(kappa, value) * cls.basis((0,) * kappa, perm)

        value = ExpressionParser(text, variable_resolver(kappa, "a"), make_pair).parse()
        if isinstance(value, SkeinElement):
            return value
        if value == 0:
            return cls.zero(kappa)
        raise ParseError("expected a combination of basis pairs (a, [permutation])", 0)

    # ===== доступ =====

    @property
    def terms(self) -> Dict[BasisKey, ScalarPoly]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[BasisKey, ScalarPoly]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, exps: Sequence[int], perm: Permutation) -> ScalarPoly:
        return self._terms.get((tuple(exps), perm), ZERO)

    def is_permutation_uniform(self) -> bool:
        """
        Лежит ли элемент в подмодуле W, порождённом суммами sum_sigma (a, sigma):
        для каждого одночлена присутствуют все kappa! перестановок с одинаковым коэффициентом
        """
        rows: Dict[Exponents, Dict[Permutation, ScalarPoly]] = {}
        for (exps, perm), coeff in self._terms.items():
            rows.setdefault(exps, {})[perm] = coeff
        total = len(Permutation.all(self.kappa)) if rows else 0
        for row in rows.values():
            if len(row) != total or len(set(row.values())) != 1:
                return False
        return True

    # ===== арифметика =====

    def _check(self, other: "SkeinElement") -> None:
        if other.kappa != self.kappa:
            raise RankMismatchError(f"kappa mismatch: {self.kappa} vs {other.kappa}")

    def __add__(self, other) -> "SkeinElement":
        if not isinstance(other, SkeinElement):
            return NotImplemented
        self._check(other)
        result = dict(self._terms)
        for key, coeff in other._terms.items():
            result[key] = result.get(key, ZERO) + coeff
        return SkeinElement(self.kappa, result)

    def __neg__(self) -> "SkeinElement":
        return SkeinElement(self.kappa, {key: -coeff for key, coeff in self._terms.items()})

    def __sub__(self, other) -> "SkeinElement":
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Union[ScalarPoly, int]) -> "SkeinElement":
        factor = ScalarPoly.coerce(factor)
        return SkeinElement(self.kappa, {key: coeff * factor for key, coeff in self._terms.items()})

    def multiply_polynomial(self, poly: LaurentPoly) -> "SkeinElement":
        """Умножение на многочлен от a_1..a_kappa (действие x-ов)"""
        if poly.rank != self.kappa:
            raise RankMismatchError(f"kappa mismatch: {self.kappa} vs {poly.rank}")
        result: Dict[BasisKey, ScalarPoly] = {}
        for shift, factor in poly.items():
            for (exps, perm), coeff in self._terms.items():
                key = (tuple(a + b for a, b in zip(exps, shift)), perm)
                result[key] = result.get(key, ZERO) + coeff * factor
        return SkeinElement(self.kappa, result)

    def __mul__(self, other) -> "SkeinElement":
        if isinstance(other, ScalarPoly) or (isinstance(other, int) and not isinstance(other, bool)):
            return self.scale(other)
        if isinstance(other, LaurentPoly):
            return self.multiply_polynomial(other)
        return NotImplemented

    __rmul__ = __mul__

    def map_coefficients(self, fn: Callable[[ScalarPoly], ScalarPoly]) -> "SkeinElement":
        return SkeinElement(self.kappa, {key: fn(coeff) for key, coeff in self._terms.items()})

    def substitute_d_eq_s(self) -> "SkeinElement":
        return self.map_coefficients(ScalarPoly.substitute_d_eq_s)

    # ===== сравнение и печать =====

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return self.kappa == other.kappa and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.kappa, frozenset(self._terms.items())))
        return self._hash

    def __getstate__(self):
        return (self.kappa, self._terms)

    def __setstate__(self, state):
        self.kappa, self._terms = state
        self._hash = None

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        ordered = sorted(self._terms.items(), key=lambda item: (tuple(-e for e in item[0][0]), item[0][1]))
        parts = (format_scaled(coeff, format_basis(exps, perm)) for (exps, perm), coeff in ordered)
        return join_terms(parts)

    def __repr__(self) -> str:
        return f"SkeinElement({self.kappa}, {str(self)!r})"


def format_basis(exps: Sequence[int], perm: Permutation) -> str:
    return f"({format_monomial(exps, 'a') or '1'},{perm})"
