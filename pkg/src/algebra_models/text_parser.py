"""
Общий разборщик текстовых записей: скаляры, многочлены Лорана, элементы PR_kappa.

Грамматика:
    expression := ['+' | '-'] term (('+' | '-') term)*
    term       := factor ('*' factor)*
    factor     := atom ['^' ['+' | '-'] NUMBER]
    atom       := NUMBER | NAME | '(' expression ')' | '(' expression ',' '[' NUMBER* ']' ')'

Смысл имён (s, c, d, X1, a2, ...) задаёт вызывающий модуль через resolve_name,
последняя форма atom (базисная пара PR_kappa) доступна только при заданном make_pair.
"""
import re
from dataclasses import dataclass
from typing import Any, Callable, List, Optional, Sequence

from algebra_models.errors import AlgebraError, ParseError

_TOKEN_RE = re.compile(r"(?P<number>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*^(),\[\]])")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    """Разбиение строки на токены, пробелы игнорируются"""
    tokens: List[Token] = []
    position = 0
    length = len(text)
    while True:
        while position < length and text[position].isspace():
            position += 1
        if position >= length:
            break
        match = _TOKEN_RE.match(text, position)
        if match is None:
            raise ParseError(f"unexpected character {text[position]!r}", position)
        tokens.append(Token(match.lastgroup, match.group(), position))
        position = match.end()
    tokens.append(Token("end", "", length))
    return tokens


class ExpressionParser:
    def __init__(
        self,
        text: str,
        resolve_name: Callable[[str, int], Any],
        make_pair: Optional[Callable[[Any, Sequence[int], int], Any]] = None,
    ):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0
        self.resolve_name = resolve_name
        self.make_pair = make_pair

    def parse(self) -> Any:
        """
        Разбор всей строки

        Returns:
            value: значение выражения; пустая строка даёт 0
        """
        if self._peek().kind == "end":
            return 0
        value = self._expression()
        token = self._peek()
        if token.kind != "end":
            raise ParseError(f"unexpected token {token.text!r}", token.position)
        return value

    def _peek(self) -> Token:
        return self.tokens[self.index]

    def _next(self) -> Token:
        token = self.tokens[self.index]
        if token.kind != "end":
            self.index += 1
        return token

    def _is_op(self, *ops: str) -> bool:
        token = self._peek()
        return token.kind == "op" and token.text in ops

    def _expect(self, op: str) -> Token:
        token = self._next()
        if token.kind != "op" or token.text != op:
            found = token.text or "end of input"
            raise ParseError(f"expected {op!r}, found {found!r}", token.position)
        return token

    def _apply(self, operation: Callable[[], Any], position: int) -> Any:
        # ошибки арифметики над несовместимыми значениями превращаем в ошибку разбора
        try:
            result = operation()
        except ParseError:
            raise
        except (TypeError, AlgebraError) as e:
            raise ParseError(f"invalid operands: {e}", position) from e
        if result is NotImplemented:
            raise ParseError("invalid operands", position)
        return result

    def _expression(self) -> Any:
        negate = False
        if self._is_op("+", "-"):
            negate = self._next().text == "-"
        position = self._peek().position
        value = self._term()
        if negate:
            value = self._apply(lambda v=value: -v, position)
        while self._is_op("+", "-"):
            op = self._next()
            rhs = self._term()
            if op.text == "+":
                value = self._apply(lambda a=value, b=rhs: a + b, op.position)
            else:
                value = self._apply(lambda a=value, b=rhs: a - b, op.position)
        return value

    def _term(self) -> Any:
        value = self._factor()
        while self._is_op("*"):
            op = self._next()
            rhs = self._factor()
            value = self._apply(lambda a=value, b=rhs: a * b, op.position)
        return value

    def _factor(self) -> Any:
        base = self._atom()
        if not self._is_op("^"):
            return base
        caret = self._next()
        sign = 1
        if self._is_op("+", "-"):
            sign = -1 if self._next().text == "-" else 1
        token = self._next()
        if token.kind != "number":
            raise ParseError("expected integer exponent", token.position)
        exponent = sign * int(token.text)
        if isinstance(base, int) and exponent < 0:
            raise ParseError("negative power of an integer", caret.position)
        return self._apply(lambda: base ** exponent, caret.position)

    def _atom(self) -> Any:
        token = self._next()
        if token.kind == "number":
            return int(token.text)
        if token.kind == "name":
            return self.resolve_name(token.text, token.position)
        if token.kind == "op" and token.text == "(":
            inner = self._expression()
            if self._is_op(","):
                return self._pair(inner, token.position)
            self._expect(")")
            return inner
        found = token.text or "end of input"
        raise ParseError(f"unexpected token {found!r}", token.position)

    def _pair(self, inner: Any, position: int) -> Any:
        comma = self._next()
        if self.make_pair is None:
            raise ParseError("basis pairs are not allowed here", comma.position)
        self._expect("[")
        images: List[int] = []
        while not self._is_op("]"):
            token = self._next()
            if token.kind == "op" and token.text == ",":
                continue
            if token.kind != "number":
                raise ParseError("expected permutation image", token.position)
            images.append(int(token.text))
        self._expect("]")
        self._expect(")")
        return self._apply(lambda: self.make_pair(inner, images, position), position)
