from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence, Tuple, Union

from ..pwl import PartialPwl, PwlFunction, merge_max, merge_min, shift_arg
from ..utils.errors import ProfileError, PwlError
from ..utils.rational import as_fraction


@dataclass(frozen=True)
class Box:
    """Прямоугольник допустимых пар (alpha1, alpha2): [a1, a2] x [b1, b2]"""
    a1: Fraction
    a2: Fraction
    b1: Fraction
    b2: Fraction

    def __post_init__(self):
        for name in ("a1", "a2", "b1", "b2"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if self.a1 > self.a2 or self.b1 > self.b2:
            raise ProfileError(f"Некорректный прямоугольник [{self.a1}, {self.a2}] x [{self.b1}, {self.b2}]")

    @classmethod
    def from_ranges(cls, first: Sequence, second: Sequence) -> "Box":
        return cls(first[0], first[1], second[0], second[1])

    @classmethod
    def point(cls, alpha1, alpha2) -> "Box":
        return cls(alpha1, alpha1, alpha2, alpha2)

    @property
    def domain(self) -> Tuple[Fraction, Fraction]:
        """Область суммарного веса alpha = alpha1 + alpha2"""
        return self.a1 + self.b1, self.a2 + self.b2

    def slice(self, alpha) -> Tuple[Fraction, Fraction]:
        """Допустимые alpha1 на диагонали alpha1 + alpha2 = alpha"""
        alpha = as_fraction(alpha)
        return max(self.a1, alpha - self.b2), min(self.a2, alpha - self.b1)

    def contains(self, alpha1, alpha2) -> bool:
        return self.a1 <= alpha1 <= self.a2 and self.b1 <= alpha2 <= self.b2


@dataclass(frozen=True)
class Split:
    """Оптимальное разбиение alpha на (alpha1, alpha2) и, если есть, положение стока y"""
    alpha1: Fraction
    alpha2: Fraction
    y: Optional[Fraction] = None

    @property
    def alpha(self) -> Fraction:
        return self.alpha1 + self.alpha2


@dataclass(frozen=True)
class Witness:
    """
    Функция-свидетель: значение целевой функции при одном структурном условии
    и правило восстановления разбиения
    """
    name: str
    function: PartialPwl
    split: Callable[[Fraction], Split] = field(compare=False, repr=False)

    @classmethod
    def of(cls, name: str, function: Union[PwlFunction, PartialPwl, None],
           split: Callable[[Fraction], Split]) -> Optional["Witness"]:
        if function is None:
            return None
        if isinstance(function, PwlFunction):
            function = PartialPwl((function,))
        if function.is_empty:
            return None
        return cls(name, function, split)

    def value(self, alpha) -> Union[Fraction, float]:
        return self.function(alpha)


@dataclass(frozen=True)
class Profile:
    """
    Профиль минимальной эвакуации: поточечный минимум свидетелей.
    partial хранит точные значения, включая скачки вниз в отдельных точках.
    """
    partial: PartialPwl
    witnesses: Tuple[Witness, ...] = ()

    @classmethod
    def from_witnesses(cls, witnesses: Iterable[Optional[Witness]]) -> "Profile":
        kept = tuple(w for w in witnesses if w is not None)
        if not kept:
            raise ProfileError("Профиль без свидетелей")
        return cls(merge_min([w.function for w in kept]), kept)

    @classmethod
    def combine(cls, profiles: Iterable["Profile"]) -> "Profile":
        """Поточечный минимум нескольких профилей"""
        witnesses = []
        for profile in profiles:
            witnesses.extend(profile.witnesses)
        return cls.from_witnesses(witnesses)

    # --- Значения ---
    def __call__(self, alpha) -> Union[Fraction, float]:
        return self.partial(as_fraction(alpha))

    @property
    def domain(self) -> Tuple[Fraction, Fraction]:
        return self.partial.segments[0].lo, self.partial.segments[-1].hi

    @property
    def size(self) -> int:
        return self.partial.size

    @property
    def is_continuous(self) -> bool:
        try:
            self.partial.to_function()
        except PwlError:
            return False
        return True

    @property
    def function(self) -> PwlFunction:
        """Профиль как одна кусочно-линейная функция (PwlError при разрыве внутри области)"""
        return self.partial.to_function()

    def split_at(self, alpha) -> Split:
        """Разбиение, на котором достигается значение профиля (первый свидетель при равенстве)"""
        alpha = as_fraction(alpha)
        best: Optional[Witness] = None
        best_value = None
        for witness in self.witnesses:
            if not witness.function.contains(alpha):
                continue
            value = witness.value(alpha)
            if best is None or value < best_value:
                best, best_value = witness, value
        if best is None:
            raise ProfileError(f"alpha = {alpha} вне области профиля")
        return best.split(alpha)

    # --- Преобразования ---
    def shifted(self, c) -> "Profile":
        """alpha -> профиль(alpha - c)"""
        c = as_fraction(c)
        witnesses = tuple(
            Witness(w.name, w.function.map(lambda f: shift_arg(f, c)), _shifted_split(w.split, c))
            for w in self.witnesses
        )
        return Profile(self.partial.map(lambda f: shift_arg(f, c)), witnesses)

    def floored(self, level) -> "Profile":
        """max(профиль, level)"""
        level = as_fraction(level)
        witnesses = tuple(
            Witness(w.name, w.function.map(lambda f: _floor(f, level)), w.split)
            for w in self.witnesses
        )
        return Profile(self.partial.map(lambda f: _floor(f, level)), witnesses)

    def located(self, y) -> "Profile":
        """Фиксирует положение стока y в разбиениях"""
        y = as_fraction(y)
        witnesses = tuple(
            Witness(w.name, w.function, _located_split(w.split, y)) for w in self.witnesses
        )
        return replace(self, witnesses=witnesses)

    def renamed(self, prefix: str) -> "Profile":
        witnesses = tuple(Witness(f"{prefix}{w.name}", w.function, w.split) for w in self.witnesses)
        return replace(self, witnesses=witnesses)


def _floor(f: PwlFunction, level: Fraction) -> PwlFunction:
    return merge_max(f, PwlFunction.constant(level, f.lo, f.hi))


def _shifted_split(split: Callable[[Fraction], Split], c: Fraction) -> Callable[[Fraction], Split]:
    return lambda alpha: split(alpha - c)


def _located_split(split: Callable[[Fraction], Split], y: Fraction) -> Callable[[Fraction], Split]:
    def located(alpha: Fraction) -> Split:
        inner = split(alpha)
        return Split(inner.alpha1, inner.alpha2, y)
    return located
