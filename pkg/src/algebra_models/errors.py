from typing import Optional


class AlgebraError(ValueError):
    """Базовая ошибка всех алгебраических операций пакета"""


class RankMismatchError(AlgebraError):
    """Операнды с разным числом переменных (разным kappa)"""


class IndexRangeError(AlgebraError):
    """Индекс образующей или переменной вне допустимого диапазона"""


class DivisionError(AlgebraError):
    """Многочлен не делится нацело на (X_i X_{i+1}^-1 - 1)"""


class DomainError(AlgebraError):
    """Аргумент вне области определения операции"""


class ParseError(AlgebraError):
    """
    Синтаксическая ошибка в текстовой записи

    Args:
        message: описание ошибки
        position: позиция (0-based) в исходной строке, если известна
    """

    def __init__(self, message: str, position: Optional[int] = None):
        self.message = message
        self.position = position
        if position is not None:
            message = f"{message} (position {position})"
        super().__init__(message)


def check_index(name: str, index: int, low: int, high: int) -> None:
    """Проверка low <= index <= high, иначе IndexRangeError"""
    if not isinstance(index, int) or isinstance(index, bool) or not low <= index <= high:
        raise IndexRangeError(f"{name} index {index} out of range [{low}, {high}]")
