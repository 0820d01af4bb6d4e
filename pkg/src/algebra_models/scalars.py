"""Кольцо коэффициентов Z[s^±1, c^±1, d^±1]"""
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from algebra_models.errors import AlgebraError, ParseError

Exponent = Tuple[int, int, int]
SYMBOLS = ("s", "c", "d")


class ScalarPoly:
    """
    Элемент Z[s^±1, c^±1, d^±1] в разреженной канонической форме:
    словарь (e_s, e_c, e_d) -> ненулевой целый коэффициент.
    Значения неизменяемы.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Exponent, int]] = None):
        clean: Dict[Exponent, int] = {}
        for key, coeff in (terms or {}).items():
            if coeff:
                clean[(int(key[0]), int(key[1]), int(key[2]))] = int(coeff)
        self._terms = clean
        self._hash = None

    # ===== конструкторы =====

    @classmethod
    def zero(cls) -> "ScalarPoly":
        return cls()

    @classmethod
    def one(cls) -> "ScalarPoly":
        return cls({(0, 0, 0): 1})

    @classmethod
    def constant(cls, value: int) -> "ScalarPoly":
        return cls({(0, 0, 0): value})

    @classmethod
    def monomial(cls, e_s: int = 0, e_c: int = 0, e_d: int = 0, coeff: int = 1) -> "ScalarPoly":
        return cls({(e_s, e_c, e_d): coeff})

    @classmethod
    def coerce(cls, value: Union["ScalarPoly", int]) -> "ScalarPoly":
        if isinstance(value, ScalarPoly):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return cls.constant(value)
        raise TypeError(f"cannot convert {type(value).__name__} to ScalarPoly")

    @classmethod
    def parse(cls, text: str) -> "ScalarPoly":
        """
        Разбор текстовой записи вида "s^2 - 2 + s^-2"

        Args:
            text: строка с целыми коэффициентами и символами s, c, d

        Returns:
            value: ScalarPoly
        """
        from algebra_models.text_parser import ExpressionParser

        def resolve(name: str, position: int) -> "ScalarPoly":
            if name not in SYMBOLS:
                raise ParseError(f"unknown symbol {name!r}", position)
            exponent = [0, 0, 0]
            exponent[SYMBOLS.index(name)] = 1
            return cls.monomial(*exponent)

        return cls.coerce(ExpressionParser(text, resolve).parse())

    # ===== доступ =====

    @property
    def terms(self) -> Dict[Exponent, int]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exponent, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def d_free(self) -> bool:
        """True, если ни один член не содержит d"""
        return all(key[2] == 0 for key in self._terms)

    # ===== арифметика =====

    def __add__(self, other) -> "ScalarPoly":
        try:
            other = ScalarPoly.coerce(other)
        except TypeError:
            return NotImplemented
        result = dict(self._terms)
        for key, coeff in other._terms.items():
            result[key] = result.get(key, 0) + coeff
        return ScalarPoly(result)

    __radd__ = __add__

    def __neg__(self) -> "ScalarPoly":
        return ScalarPoly({key: -coeff for key, coeff in self._terms.items()})

    def __sub__(self, other) -> "ScalarPoly":
        try:
            other = ScalarPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "ScalarPoly":
        try:
            other = ScalarPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "ScalarPoly":
        try:
            other = ScalarPoly.coerce(other)
        except TypeError:
            return NotImplemented
        result: Dict[Exponent, int] = {}
        for (a_s, a_c, a_d), a in self._terms.items():
            for (b_s, b_c, b_d), b in other._terms.items():
                key = (a_s + b_s, a_c + b_c, a_d + b_d)
                result[key] = result.get(key, 0) + a * b
        return ScalarPoly(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "ScalarPoly":
        if exponent < 0:
            if not self.is_monomial():
                raise AlgebraError("only monomials are invertible in Z[s^±1, c^±1, d^±1]")
            ((key, coeff),) = self._terms.items()
            if coeff not in (1, -1):
                raise AlgebraError(f"coefficient {coeff} is not a unit")
            inverse = ScalarPoly({(-key[0], -key[1], -key[2]): coeff})
            return inverse ** (-exponent)
        result = ScalarPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ===== подстановки =====

    def substitute_d_eq_s(self) -> "ScalarPoly":
        result: Dict[Exponent, int] = {}
        for (e_s, e_c, e_d), coeff in self._terms.items():
            key = (e_s + e_d, e_c, 0)
            result[key] = result.get(key, 0) + coeff
        return ScalarPoly(result)

    def evaluate(self, s=1, c=1, d=1) -> Fraction:
        """Точное значение в рациональной точке (s, c, d)"""
        s, c, d = Fraction(s), Fraction(c), Fraction(d)
        total = Fraction(0)
        for (e_s, e_c, e_d), coeff in self._terms.items():
            total += coeff * s ** e_s * c ** e_c * d ** e_d
        return total

    # ===== сравнение и печать =====

    def __eq__(self, other) -> bool:
        try:
            other = ScalarPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        # константа хешируется как int, которому она равна
        if self._hash is None:
            if not self._terms:
                self._hash = hash(0)
            elif set(self._terms) == {(0, 0, 0)}:
                self._hash = hash(self._terms[(0, 0, 0)])
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __getstate__(self):
        return (self._terms,)

    def __setstate__(self, state):
        self._terms = state[0]
        self._hash = None

    def sorted_terms(self):
        return sorted(self._terms.items(), reverse=True)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return join_terms(format_scalar_term(key, coeff) for key, coeff in self.sorted_terms())

    def __repr__(self) -> str:
        return f"ScalarPoly({str(self)!r})"


def format_power(name: str, exponent: int) -> str:
    return name if exponent == 1 else f"{name}^{exponent}"


def format_scalar_term(key: Exponent, coeff: int) -> str:
    factors = [format_power(name, e) for name, e in zip(SYMBOLS, key) if e != 0]
    if not factors:
        return str(coeff)
    monomial = "*".join(factors)
    if coeff == 1:
        return monomial
    if coeff == -1:
        return f"-{monomial}"
    return f"{coeff}*{monomial}"


def join_terms(parts) -> str:
    """Склейка печатных членов суммы через ' + ' / ' - '"""
    result = ""
    for part in parts:
        if not result:
            result = part
        elif part.startswith("-"):
            result += " - " + part[1:]
        else:
            result += " + " + part
    return result or "0"


S = ScalarPoly.monomial(1, 0, 0)
C = ScalarPoly.monomial(0, 1, 0)
D = ScalarPoly.monomial(0, 0, 1)
ONE = ScalarPoly.one()
ZERO = ScalarPoly.zero()


def scalar_add(a: ScalarPoly, b: ScalarPoly) -> ScalarPoly:
    return a + b


def scalar_mul(a: ScalarPoly, b: ScalarPoly) -> ScalarPoly:
    return a * b


def hbar() -> ScalarPoly:
    """Параметр скейн-соотношения: s - s^-1"""
    return ScalarPoly({(1, 0, 0): 1, (-1, 0, 0): -1})


def substitute_d_eq_s(a: ScalarPoly) -> ScalarPoly:
    return a.substitute_d_eq_s()


def scalar_evaluate(a: ScalarPoly, s=1, c=1, d=1) -> Fraction:
    return a.evaluate(s=s, c=c, d=d)


def format_scaled(coeff: ScalarPoly, body: str) -> str:
    """
    Печать одного члена coeff*body внешней суммы

    Args:
        coeff: ненулевой коэффициент
        body: печатная форма базисного элемента, "" для свободного члена
    """
    if not body:
        return str(coeff)
    if coeff == 1:
        return body
    if coeff == -1:
        return f"-{body}"
    if coeff.is_monomial():
        return f"{coeff}*{body}"
    return f"({coeff})*{body}"
