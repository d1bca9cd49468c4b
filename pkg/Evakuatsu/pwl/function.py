"""
Кусочно-линейные функции в точной арифметике
"""
import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from ..utils.errors import PwlError
from ..utils.rational import as_fraction


@dataclass(frozen=True)
class Line:
    """Прямая slope * x + intercept; tag - индекс источника (например t у g_t)"""
    slope: Fraction
    intercept: Fraction
    tag: Optional[int] = None

    def __call__(self, x) -> Fraction:
        return self.slope * x + self.intercept

    def crossing(self, other: "Line") -> Optional[Fraction]:
        """Абсцисса пересечения; None для параллельных прямых"""
        if self.slope == other.slope:
            return None
        return (other.intercept - self.intercept) / (self.slope - other.slope)


@dataclass(frozen=True)
class PwlFunction:
    """
    Непрерывная кусочно-линейная функция на отрезке [xs[0], xs[-1]]

    Значения заданы в точках излома xs. left_value - точное значение в левом конце,
    если оно отличается от непрерывного продолжения (скачок вниз в alpha = 0,
    когда весь вес обнуляется). extension() его отбрасывает.
    """
    xs: Tuple[Fraction, ...]
    ys: Tuple[Fraction, ...]
    left_value: Optional[Fraction] = None

    def __post_init__(self):
        if not self.xs or len(self.xs) != len(self.ys):
            raise PwlError("Точки излома и значения должны быть непустыми и одной длины")
        for a, b in zip(self.xs, self.xs[1:]):
            if not a < b:
                raise PwlError(f"Точки излома не возрастают строго: {a}, {b}")

    # --- Конструкторы ---
    @classmethod
    def from_points(cls, xs: Sequence, ys: Sequence, left_value=None) -> "PwlFunction":
        """Каноническая форма: повторы и коллинеарные изломы удаляются"""
        points: List[Tuple[Fraction, Fraction]] = []
        for x, y in zip(xs, ys):
            x, y = as_fraction(x), as_fraction(y)
            if points and points[-1][0] == x:
                if points[-1][1] != y:
                    raise PwlError(f"Разрыв в точке {x}: {points[-1][1]} и {y}")
                continue
            if points and points[-1][0] > x:
                raise PwlError(f"Точки не упорядочены: {points[-1][0]} > {x}")
            while len(points) >= 2 and _collinear(points[-2], points[-1], (x, y)):
                points.pop()
            points.append((x, y))
        if not points:
            raise PwlError("Пустой набор точек")
        if left_value is not None:
            left_value = as_fraction(left_value)
            if left_value == points[0][1]:
                left_value = None
        return cls(tuple(p[0] for p in points), tuple(p[1] for p in points), left_value)

    @classmethod
    def constant(cls, value, lo, hi) -> "PwlFunction":
        lo, hi = as_fraction(lo), as_fraction(hi)
        if lo > hi:
            raise PwlError(f"Пустая область [{lo}, {hi}]")
        value = as_fraction(value)
        if lo == hi:
            return cls((lo,), (value,))
        return cls((lo, hi), (value, value))

    @classmethod
    def from_lines(cls, lines: Iterable[Line], lo, hi) -> "PwlFunction":
        """Максимум прямых в любом порядке на [lo, hi]"""
        from .algebra import upper_envelope

        ordered = sorted(lines, key=lambda line: (line.slope, line.intercept))
        return upper_envelope(ordered, (lo, hi))

    @classmethod
    def from_line(cls, line: Line, lo, hi) -> "PwlFunction":
        lo, hi = as_fraction(lo), as_fraction(hi)
        if lo > hi:
            raise PwlError(f"Пустая область [{lo}, {hi}]")
        if lo == hi:
            return cls((lo,), (line(lo),))
        return cls((lo, hi), (line(lo), line(hi)))

    # --- Свойства ---
    @property
    def lo(self) -> Fraction:
        return self.xs[0]

    @property
    def hi(self) -> Fraction:
        return self.xs[-1]

    @property
    def domain(self) -> Tuple[Fraction, Fraction]:
        return self.xs[0], self.xs[-1]

    @property
    def size(self) -> int:
        """Число линейных кусков"""
        return len(self.xs) - 1

    @property
    def is_point(self) -> bool:
        return len(self.xs) == 1

    @property
    def slopes(self) -> List[Fraction]:
        return [
            (y2 - y1) / (x2 - x1)
            for x1, x2, y1, y2 in zip(self.xs, self.xs[1:], self.ys, self.ys[1:])
        ]

    @property
    def pieces(self) -> List[Tuple[Fraction, Fraction, Line]]:
        """Куски (q_{t-1}, q_t, прямая)"""
        result = []
        for k, slope in enumerate(self.slopes):
            result.append((self.xs[k], self.xs[k + 1], Line(slope, self.ys[k] - slope * self.xs[k])))
        return result

    @property
    def is_good(self) -> bool:
        """Все наклоны неотрицательны"""
        return all(m >= 0 for m in self.slopes)

    @property
    def is_positive(self) -> bool:
        """Все наклоны положительны"""
        return all(m > 0 for m in self.slopes)

    @property
    def is_convex(self) -> bool:
        slopes = self.slopes
        return all(a <= b for a, b in zip(slopes, slopes[1:]))

    # --- Значения ---
    def contains(self, x) -> bool:
        return self.xs[0] <= x <= self.xs[-1]

    def limit_at(self, x) -> Fraction:
        """Значение непрерывного продолжения"""
        if not self.contains(x):
            raise PwlError(f"Аргумент {x} вне области [{self.lo}, {self.hi}]")
        k = bisect_right(self.xs, x) - 1
        if k >= len(self.xs) - 1:
            return self.ys[-1]
        x1, x2, y1, y2 = self.xs[k], self.xs[k + 1], self.ys[k], self.ys[k + 1]
        return y1 + (y2 - y1) * (x - x1) / (x2 - x1)

    def __call__(self, x) -> Fraction:
        """Точное значение (с учётом left_value)"""
        if self.left_value is not None and x == self.xs[0]:
            return self.left_value
        return self.limit_at(x)

    def extension(self) -> "PwlFunction":
        if self.left_value is None:
            return self
        return PwlFunction(self.xs, self.ys)


def _collinear(a, b, c) -> bool:
    return (b[1] - a[1]) * (c[0] - b[0]) == (c[1] - b[1]) * (b[0] - a[0])


def evaluate(f: PwlFunction, alpha) -> Fraction:
    """Точное значение f(alpha) двоичным поиском по точкам излома"""
    return f(as_fraction(alpha))


@dataclass(frozen=True)
class PartialPwl:
    """
    Частичная функция: упорядоченные отрезки со своими PwlFunction.
    Вне отрезков значение +inf; в общей точке двух отрезков берётся минимум.
    """
    segments: Tuple[PwlFunction, ...] = ()

    def __post_init__(self):
        ordered = tuple(sorted(self.segments, key=lambda f: (f.lo, f.hi)))
        for a, b in zip(ordered, ordered[1:]):
            if b.lo < a.hi:
                raise PwlError(f"Отрезки [{a.lo}, {a.hi}] и [{b.lo}, {b.hi}] перекрываются")
        object.__setattr__(self, "segments", ordered)

    @classmethod
    def of(cls, items: Iterable[Union["PartialPwl", PwlFunction, None]]) -> List[PwlFunction]:
        """Все отрезки набора частичных и обычных функций"""
        result: List[PwlFunction] = []
        for item in items:
            if item is None:
                continue
            if isinstance(item, PwlFunction):
                result.append(item)
            else:
                result.extend(item.segments)
        return result

    @property
    def is_empty(self) -> bool:
        return not self.segments

    @property
    def intervals(self) -> List[Tuple[Fraction, Fraction]]:
        return [f.domain for f in self.segments]

    @property
    def size(self) -> int:
        return sum(max(f.size, 1) for f in self.segments)

    def contains(self, x) -> bool:
        return any(f.contains(x) for f in self.segments)

    def __call__(self, x) -> Union[Fraction, float]:
        """Точное значение; +inf вне области"""
        values = [f(x) for f in self.segments if f.contains(x)]
        return min(values) if values else math.inf

    def to_function(self) -> PwlFunction:
        """
        Склейка в одну непрерывную функцию

        Raises:
            PwlError: при пропуске в области или разрыве внутри неё
        """
        if not self.segments:
            raise PwlError("Пустая частичная функция")
        start = self.segments[0].lo
        exact_start = min(f(start) for f in self.segments if f.lo == start)
        xs: List[Fraction] = []
        ys: List[Fraction] = []
        for f in self.segments:
            if f.is_point:
                x = f.lo
                if x == start:
                    continue
                if not xs or x != xs[-1]:
                    raise PwlError(f"Пропуск в области перед точкой {x}")
                if f.ys[0] < ys[-1]:
                    raise PwlError(f"Разрыв в точке {x}")
                continue
            if not xs:
                if f.lo != start:
                    raise PwlError(f"Пропуск в области перед {f.lo}")
                xs, ys = list(f.xs), list(f.ys)
                continue
            if f.lo != xs[-1]:
                raise PwlError(f"Пропуск в области между {xs[-1]} и {f.lo}")
            if f.ys[0] != ys[-1] or f.left_value is not None:
                raise PwlError(f"Разрыв в точке {f.lo}")
            xs.extend(f.xs[1:])
            ys.extend(f.ys[1:])
        if not xs:
            return PwlFunction((start,), (exact_start,))
        return PwlFunction.from_points(xs, ys, exact_start if exact_start < ys[0] else None)

    def map(self, transform) -> "PartialPwl":
        """Применяет преобразование к каждому отрезку"""
        return PartialPwl(tuple(transform(f) for f in self.segments))
