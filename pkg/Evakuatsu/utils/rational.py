"""
Точные рациональные числа: разбор и форматирование
"""
import math
from fractions import Fraction
from typing import Any, Dict, Union

from .errors import InputFileError

Rational = Union[Fraction, int]


def parse_rational(value: Any, name: str = "значение") -> Fraction:
    """
    Разбирает рациональное число без потери точности

    Args:
        value: строка "p/q", десятичный литерал, int или Fraction
        name: имя поля для сообщения об ошибке
    Returns:
        Fraction: точное значение
    """
    if isinstance(value, bool):
        raise InputFileError(f"{name}: ожидалось число, получено {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        # JSON-числа берём по их десятичной записи
        if not math.isfinite(value):
            raise InputFileError(f"{name}: бесконечность недопустима")
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise InputFileError(f"{name}: не удалось разобрать {value!r}") from None
    raise InputFileError(f"{name}: неподдерживаемый тип {type(value).__name__}")


def as_fraction(value: Any) -> Fraction:
    """Приводит число к Fraction (для аргументов API)"""
    if isinstance(value, Fraction):
        return value
    return parse_rational(value)


def format_rational(value: Union[Fraction, int, float]) -> str:
    """Каноническая запись "p/q" (или "p" при q = 1)"""
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        value = Fraction(repr(value))
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_decimal(value: Union[Fraction, int, float], digits: int = 12) -> float:
    """Десятичное приближение для вывода"""
    if isinstance(value, float) and math.isinf(value):
        return value
    return round(float(value), digits)


def rational_fields(values: Dict[str, Any], digits: int = 12) -> Dict[str, Any]:
    """
    Точные строки и десятичные приближения для набора рациональных полей

    Returns:
        Dict: {"имя": "p/q", ..., "decimal": {"имя": float, ...}}
    """
    exact = {}
    decimal = {}
    for key, value in values.items():
        if value is None:
            exact[key] = None
            continue
        exact[key] = format_rational(value)
        decimal[key] = to_decimal(value, digits)
    exact["decimal"] = decimal
    return exact
