"""Разреженные многочлены Лорана от X_1..X_kappa над ScalarPoly"""
import logging
from typing import Callable, Dict, Iterator, Mapping, Optional, Sequence, Tuple, Union

from algebra_models.errors import AlgebraError, DivisionError, ParseError, RankMismatchError, check_index
from algebra_models.scalars import C, ZERO, ScalarPoly, format_power, format_scaled, join_terms
from core import settings

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]
Coefficient = Union[ScalarPoly, int]


class LaurentPoly:
    """
    Элемент Z[s^±1, c^±1, d^±1][X_1^±1, ..., X_kappa^±1].
    rank = kappa хранится в каждом значении и сверяется в каждой бинарной операции.
    """

    __slots__ = ("rank", "_terms", "_hash")

    def __init__(self, rank: int, terms: Optional[Mapping[Sequence[int], Coefficient]] = None):
        if rank < 1:
            raise AlgebraError(f"rank must be positive, got {rank}")
        clean: Dict[Exponents, ScalarPoly] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != rank:
                raise RankMismatchError(f"exponent vector {exps} has length {len(exps)}, expected {rank}")
            clean[exps] = clean.get(exps, ZERO) + ScalarPoly.coerce(coeff)
        self.rank = rank
        self._terms = {exps: coeff for exps, coeff in clean.items() if coeff}
        self._hash = None

    # ===== конструкторы =====

    @classmethod
    def zero(cls, rank: int) -> "LaurentPoly":
        return cls(rank)

    @classmethod
    def constant(cls, rank: int, value: Coefficient = 1) -> "LaurentPoly":
        return cls(rank, {(0,) * rank: value})

    @classmethod
    def one(cls, rank: int) -> "LaurentPoly":
        return cls.constant(rank, 1)

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: Coefficient = 1) -> "LaurentPoly":
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def variable(cls, rank: int, i: int, power: int = 1) -> "LaurentPoly":
        check_index("variable", i, 1, rank)
        exps = [0] * rank
        exps[i - 1] = power
        return cls(rank, {tuple(exps): 1})

    @classmethod
    def divisor(cls, rank: int, i: int) -> "LaurentPoly":
        """X_i X_{i+1}^-1 - 1"""
        check_index("variable pair", i, 1, rank - 1)
        exps = [0] * rank
        exps[i - 1], exps[i] = 1, -1
        return cls(rank, {tuple(exps): 1, (0,) * rank: -1})

    @classmethod
    def parse(cls, text: str, rank: int, prefix: str = "X") -> "LaurentPoly":
        """
        Разбор записи вида "s*X1^2*X2^-1 + c^2*X2"

        Args:
            text: строка
            rank: число переменных kappa
            prefix: имя переменных ("X" для p, "a" для PR_kappa)

        Returns:
            value: LaurentPoly
        """
        from algebra_models.text_parser import ExpressionParser

        return cls.coerce(rank, ExpressionParser(text, variable_resolver(rank, prefix)).parse())

    def coerce_operand(self, other) -> Optional["LaurentPoly"]:
        if isinstance(other, LaurentPoly):
            if other.rank != self.rank:
                raise RankMismatchError(f"rank mismatch: {self.rank} vs {other.rank}")
            return other
        if isinstance(other, ScalarPoly) or (isinstance(other, int) and not isinstance(other, bool)):
            return LaurentPoly.constant(self.rank, other)
        return None

    @classmethod
    def coerce(cls, rank: int, value) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            if value.rank != rank:
                raise RankMismatchError(f"rank mismatch: {rank} vs {value.rank}")
            return value
        return cls.constant(rank, ScalarPoly.coerce(value))

    # ===== доступ =====

    @property
    def terms(self) -> Dict[Exponents, ScalarPoly]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exponents, ScalarPoly]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coefficient(self, exps: Sequence[int]) -> ScalarPoly:
        return self._terms.get(tuple(exps), ZERO)

    # ===== арифметика =====

    def __add__(self, other) -> "LaurentPoly":
        other = self.coerce_operand(other)
        if other is None:
            return NotImplemented
        result = dict(self._terms)
        for exps, coeff in other._terms.items():
            result[exps] = result.get(exps, ZERO) + coeff
        return LaurentPoly(self.rank, result)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.rank, {exps: -coeff for exps, coeff in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        other = self.coerce_operand(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        other = self.coerce_operand(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, ScalarPoly) or (isinstance(other, int) and not isinstance(other, bool)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        other = self.coerce_operand(other)
        result: Dict[Exponents, ScalarPoly] = {}
        for exps_a, coeff_a in self._terms.items():
            for exps_b, coeff_b in other._terms.items():
                exps = tuple(a + b for a, b in zip(exps_a, exps_b))
                result[exps] = result.get(exps, ZERO) + coeff_a * coeff_b
        return LaurentPoly(self.rank, result)

    def __rmul__(self, other) -> "LaurentPoly":
        if isinstance(other, ScalarPoly) or (isinstance(other, int) and not isinstance(other, bool)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            if not self.is_monomial():
                raise AlgebraError("only monomials are invertible in the Laurent ring")
            ((exps, coeff),) = self._terms.items()
            inverse = LaurentPoly(self.rank, {tuple(-e for e in exps): coeff ** -1})
            return inverse ** (-exponent)
        result = LaurentPoly.one(self.rank)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor: Coefficient) -> "LaurentPoly":
        factor = ScalarPoly.coerce(factor)
        return LaurentPoly(self.rank, {exps: coeff * factor for exps, coeff in self._terms.items()})

    def shift(self, exps: Sequence[int]) -> "LaurentPoly":
        """Умножение на одночлен X^exps"""
        if len(exps) != self.rank:
            raise RankMismatchError(f"rank mismatch: {self.rank} vs {len(exps)}")
        return LaurentPoly(
            self.rank,
            {tuple(a + b for a, b in zip(key, exps)): coeff for key, coeff in self._terms.items()},
        )

    def map_coefficients(self, fn: Callable[[ScalarPoly], ScalarPoly]) -> "LaurentPoly":
        return LaurentPoly(self.rank, {exps: fn(coeff) for exps, coeff in self._terms.items()})

    def substitute_d_eq_s(self) -> "LaurentPoly":
        return self.map_coefficients(ScalarPoly.substitute_d_eq_s)

    # ===== операторы tau_i, omega =====

    def apply_tau(self, i: int) -> "LaurentPoly":
        """tau_i: перестановка X_i и X_{i+1}"""
        check_index("tau", i, 1, self.rank - 1)
        result = {}
        for exps, coeff in self._terms.items():
            swapped = list(exps)
            swapped[i - 1], swapped[i] = exps[i], exps[i - 1]
            result[tuple(swapped)] = coeff
        return LaurentPoly(self.rank, result)

    def apply_omega(self) -> "LaurentPoly":
        """(omega f)(X_1, ..., X_kappa) = f(c^2 X_kappa, X_1, ..., X_{kappa-1})"""
        result = {}
        for exps, coeff in self._terms.items():
            result[exps[1:] + exps[:1]] = coeff * C ** (2 * exps[0])
        return LaurentPoly(self.rank, result)

    def apply_omega_inv(self) -> "LaurentPoly":
        result = {}
        for exps, coeff in self._terms.items():
            result[exps[-1:] + exps[:-1]] = coeff * C ** (-2 * exps[-1])
        return LaurentPoly(self.rank, result)

    def exact_divide(self, i: int) -> "LaurentPoly":
        """
        Точное деление на X_i X_{i+1}^-1 - 1

        Члены группируются по прямым n + k(e_i - e_{i+1}); на каждой прямой это
        одномерное деление многочлена Лорана от Y = X_i/X_{i+1} на (Y - 1).

        Args:
            i: номер пары переменных, 1 <= i <= kappa-1

        Returns:
            quotient: q с q*(X_i X_{i+1}^-1 - 1) = self

        Raises:
            DivisionError: ненулевой остаток
        """
        check_index("division", i, 1, self.rank - 1)
        p = i - 1
        lines: Dict[Exponents, Dict[int, ScalarPoly]] = {}
        for exps, coeff in self._terms.items():
            key = exps[:p] + (exps[p] + exps[p + 1],) + exps[p + 2:]
            lines.setdefault(key, {})[exps[p]] = coeff
        quotient: Dict[Exponents, ScalarPoly] = {}
        for key, line in lines.items():
            total = key[p]
            top, bottom = max(line), min(line)
            acc = ZERO
            for t in range(top, bottom, -1):
                acc = acc + line.get(t, ZERO)
                if acc:
                    quotient[key[:p] + (t - 1, total - t + 1) + key[p + 1:]] = acc
            if acc + line[bottom]:
                raise DivisionError(f"{self} is not divisible by X{i}*X{i + 1}^-1 - 1")
        result = LaurentPoly(self.rank, quotient)
        if settings.CHECK_DIVISION and result * LaurentPoly.divisor(self.rank, i) != self:
            logger.error("multiply-back check failed for exact_divide(%s, %d)", self, i)
            raise DivisionError(f"multiply-back check failed for exact_divide({self}, {i})")
        return result

    # ===== сравнение и печать =====

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.rank == other.rank and self._terms == other._terms
        if isinstance(other, ScalarPoly) or (isinstance(other, int) and not isinstance(other, bool)):
            return self._terms == LaurentPoly.constant(self.rank, other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        # константа хешируется как её коэффициент
        if self._hash is None:
            zero = (0,) * self.rank
            if not self._terms:
                self._hash = hash(0)
            elif set(self._terms) == {zero}:
                self._hash = hash(self._terms[zero])
            else:
                self._hash = hash((self.rank, frozenset(self._terms.items())))
        return self._hash

    def __getstate__(self):
        return (self.rank, self._terms)

    def __setstate__(self, state):
        self.rank, self._terms = state
        self._hash = None

    def to_string(self, prefix: str = "X") -> str:
        if not self._terms:
            return "0"
        parts = (
            format_scaled(coeff, format_monomial(exps, prefix))
            for exps, coeff in sorted(self._terms.items(), reverse=True)
        )
        return join_terms(parts)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.rank}, {str(self)!r})"


def format_monomial(exps: Sequence[int], prefix: str = "X") -> str:
    """Печать одночлена: "X1^2*X2^-1", пустая строка для 1"""
    return "*".join(format_power(f"{prefix}{j + 1}", e) for j, e in enumerate(exps) if e != 0)


def variable_resolver(rank: int, prefix: str) -> Callable[[str, int], object]:
    """Функция разрешения имён s, c, d и <prefix><j> для ExpressionParser"""

    def resolve(name: str, position: int):
        if name in ("s", "c", "d"):
            return ScalarPoly.parse(name)
        if name.startswith(prefix) and name[len(prefix):].isdigit():
            index = int(name[len(prefix):])
            if not 1 <= index <= rank:
                raise ParseError(f"variable {name} out of range for kappa={rank}", position)
            return LaurentPoly.variable(rank, index)
        raise ParseError(f"unknown symbol {name!r}", position)

    return resolve


def lp_add(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f + g


def lp_mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f * g


def apply_tau(i: int, f: LaurentPoly) -> LaurentPoly:
    return f.apply_tau(i)


def apply_omega(f: LaurentPoly) -> LaurentPoly:
    return f.apply_omega()


def apply_omega_inv(f: LaurentPoly) -> LaurentPoly:
    return f.apply_omega_inv()


def exact_divide(f: LaurentPoly, i: int) -> LaurentPoly:
    return f.exact_divide(i)
