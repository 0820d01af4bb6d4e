"""Слова в образующих sigma_i, x_i, y_i и соотношения алгебры DAHA"""
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Sequence, Tuple

from algebra_models.errors import AlgebraError, IndexRangeError, ParseError, check_index
from algebra_models.scalars import C, ONE, ScalarPoly, format_scaled, hbar, join_terms


class LetterKind(str, Enum):
    SIGMA = "s"
    X = "x"
    Y = "y"


@dataclass(frozen=True)
class GeneratorLetter:
    kind: LetterKind
    index: int
    exponent: int = 1

    def __post_init__(self):
        if self.exponent not in (1, -1):
            raise AlgebraError(f"letter exponent must be +1 or -1, got {self.exponent}")

    def inverse(self) -> "GeneratorLetter":
        return GeneratorLetter(self.kind, self.index, -self.exponent)

    def check(self, kappa: int) -> None:
        high = kappa - 1 if self.kind is LetterKind.SIGMA else kappa
        check_index(self.kind.value, self.index, 1, high)

    def __str__(self) -> str:
        name = f"{self.kind.value}{self.index}"
        return name if self.exponent == 1 else f"{name}^-1"


def sigma(i: int, exponent: int = 1) -> GeneratorLetter:
    return GeneratorLetter(LetterKind.SIGMA, i, exponent)


def x(i: int, exponent: int = 1) -> GeneratorLetter:
    return GeneratorLetter(LetterKind.X, i, exponent)


def y(i: int, exponent: int = 1) -> GeneratorLetter:
    return GeneratorLetter(LetterKind.Y, i, exponent)


@dataclass(frozen=True)
class GeneratorWord:
    """
    Слово в образующих DAHA; пустое слово - единица алгебры.
    Слово не нормализуется: его смысл задают представления.
    """

    kappa: int
    letters: Tuple[GeneratorLetter, ...] = ()

    def __post_init__(self):
        if self.kappa < 1:
            raise AlgebraError(f"kappa must be positive, got {self.kappa}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            letter.check(self.kappa)

    @classmethod
    def identity(cls, kappa: int) -> "GeneratorWord":
        return cls(kappa, ())

    @classmethod
    def parse(cls, text: str, kappa: int) -> "GeneratorWord":
        return parse_word(text, kappa)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "GeneratorWord") -> "GeneratorWord":
        if not isinstance(other, GeneratorWord):
            return NotImplemented
        if other.kappa != self.kappa:
            raise AlgebraError(f"kappa mismatch: {self.kappa} vs {other.kappa}")
        return GeneratorWord(self.kappa, self.letters + other.letters)

    def inverse(self) -> "GeneratorWord":
        return GeneratorWord(self.kappa, tuple(letter.inverse() for letter in reversed(self.letters)))

    def __str__(self) -> str:
        # подряд идущие одинаковые буквы печатаются степенью
        parts: List[str] = []
        runs: List[List] = []
        for letter in self.letters:
            if runs and runs[-1][0] == letter:
                runs[-1][1] += 1
            else:
                runs.append([letter, 1])
        for letter, count in runs:
            name = f"{letter.kind.value}{letter.index}"
            power = count * letter.exponent
            parts.append(name if power == 1 else f"{name}^{power}")
        return " * ".join(parts)


_WORD_TOKEN_RE = re.compile(r"\s*(?:(?P<letter>([sxy])(\d+)(?:\s*\^\s*([+-]?\d+))?)|(?P<star>\*))")


def parse_word(text: str, kappa: int) -> GeneratorWord:
    """
    Разбор слова вида "x1^-1 * y1 * x1 * y1^-1"

    Args:
        text: запись слова, пустая строка - единица
        kappa: число нитей

    Returns:
        word: GeneratorWord, степень ^n раскрыта в |n| одинаковых букв
    """
    letters: List[GeneratorLetter] = []
    position = 0
    expect_letter = True
    stripped_end = len(text.rstrip())
    while position < stripped_end:
        match = _WORD_TOKEN_RE.match(text, position)
        if match is None:
            offset = position + len(text[position:]) - len(text[position:].lstrip())
            raise ParseError(f"unexpected character {text[offset]!r}", offset)
        start = match.start("letter") if match.group("letter") else match.start("star")
        if match.group("star"):
            if expect_letter:
                raise ParseError("expected a letter before '*'", start)
            expect_letter = True
        else:
            if not expect_letter:
                raise ParseError("expected '*' between letters", start)
            kind = LetterKind(match.group(2))
            index = int(match.group(3))
            power = int(match.group(4)) if match.group(4) is not None else 1
            letter = GeneratorLetter(kind, index, 1 if power >= 0 else -1)
            try:
                letter.check(kappa)
            except IndexRangeError as e:
                raise IndexRangeError(f"{e} for kappa={kappa} (position {start})") from e
            letters.extend([letter] * abs(power))
            expect_letter = False
        position = match.end()
    if position and expect_letter:
        raise ParseError("word ends with '*'", stripped_end)
    return GeneratorWord(kappa, tuple(letters))


def _expand(letter: GeneratorLetter, i: int, kappa: int) -> GeneratorWord:
    check_index(letter.kind.value, i, 1, kappa)
    prefix = [sigma(j) for j in range(i - 1, 0, -1)]
    suffix = [sigma(j) for j in range(1, i)]
    return GeneratorWord(kappa, tuple(prefix + [letter] + suffix))


def expand_xi(i: int, kappa: int) -> GeneratorWord:
    """x_i = sigma_{i-1}...sigma_1 x_1 sigma_1...sigma_{i-1}"""
    return _expand(x(1), i, kappa)


def expand_yi(i: int, kappa: int) -> GeneratorWord:
    """y_i = sigma_{i-1}...sigma_1 y_1 sigma_1...sigma_{i-1}"""
    return _expand(y(1), i, kappa)


@dataclass(frozen=True)
class WordCombination:
    """Формальная Z[s^±1, c^±1]-линейная комбинация слов"""

    kappa: int
    terms: Tuple[Tuple[ScalarPoly, GeneratorWord], ...]

    @classmethod
    def of(cls, word: GeneratorWord, coeff: ScalarPoly = ONE) -> "WordCombination":
        return cls(word.kappa, ((coeff, word),))

    def __str__(self) -> str:
        return join_terms(format_scaled(coeff, str(word)) for coeff, word in self.terms)


@dataclass(frozen=True)
class RelationPair:
    label: int
    lhs: WordCombination
    rhs: WordCombination

    def __post_init__(self):
        if self.lhs.kappa != self.rhs.kappa:
            raise AlgebraError("relation sides have different kappa")

    @property
    def kappa(self) -> int:
        return self.lhs.kappa

    def __str__(self) -> str:
        return f"({self.label}) {self.lhs} = {self.rhs}"


def _word(kappa: int, letters: Iterable[GeneratorLetter]) -> GeneratorWord:
    return GeneratorWord(kappa, tuple(letters))


def _pair(label: int, kappa: int, lhs: Sequence[GeneratorLetter], rhs: Sequence[GeneratorLetter]) -> RelationPair:
    return RelationPair(label, WordCombination.of(_word(kappa, lhs)), WordCombination.of(_word(kappa, rhs)))


def relation_table(kappa: int) -> List[RelationPair]:
    """
    Все экземпляры соотношений (1)-(9) копредставления DAHA для данного kappa

    Args:
        kappa: число нитей

    Returns:
        relations: список RelationPair, упорядоченный по номеру соотношения
    """
    if kappa < 1:
        raise AlgebraError(f"kappa must be positive, got {kappa}")
    s1, s1_inv, x1, x1_inv, y1, y1_inv = sigma(1), sigma(1, -1), x(1), x(1, -1), y(1), y(1, -1)
    relations: List[RelationPair] = []
    # (1) sigma_i sigma_j = sigma_j sigma_i, |i-j| > 1
    for i in range(1, kappa):
        for j in range(i + 2, kappa):
            relations.append(_pair(1, kappa, [sigma(i), sigma(j)], [sigma(j), sigma(i)]))
    # (2) braid relation
    for i in range(1, kappa - 1):
        relations.append(
            _pair(2, kappa, [sigma(i), sigma(i + 1), sigma(i)], [sigma(i + 1), sigma(i), sigma(i + 1)])
        )
    # (3), (4) sigma_i commutes with x_1, y_1 for i > 1
    for i in range(2, kappa):
        relations.append(_pair(3, kappa, [sigma(i), x1], [x1, sigma(i)]))
    for i in range(2, kappa):
        relations.append(_pair(4, kappa, [sigma(i), y1], [y1, sigma(i)]))
    if kappa >= 2:
        relations.append(_pair(5, kappa, [x1, s1, x1, s1], [s1, x1, s1, x1]))
        relations.append(_pair(6, kappa, [y1, s1, y1, s1], [s1, y1, s1, y1]))
        relations.append(_pair(7, kappa, [x1, s1, y1, s1_inv], [s1, y1, s1, x1]))
        # (8) (sigma_1 - s)(sigma_1 + s^-1) = 0  <=>  sigma_1^2 = hbar*sigma_1 + 1
        relations.append(
            RelationPair(
                8,
                WordCombination.of(_word(kappa, [s1, s1])),
                WordCombination(kappa, ((hbar(), _word(kappa, [s1])), (ONE, GeneratorWord.identity(kappa)))),
            )
        )
    # (9) x_1^-1 y_1 x_1 y_1^-1 = c^2 sigma_1...sigma_{kappa-1} sigma_{kappa-1}...sigma_1
    chain = [sigma(j) for j in range(1, kappa)] + [sigma(j) for j in range(kappa - 1, 0, -1)]
    relations.append(
        RelationPair(
            9,
            WordCombination.of(_word(kappa, [x1_inv, y1, x1, y1_inv])),
            WordCombination.of(_word(kappa, chain), C ** 2),
        )
    )
    return relations
