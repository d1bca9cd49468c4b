from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from ..utils.errors import InstanceError, ScenarioError
from ..utils.rational import as_fraction
from .sparse_table import SparseTable


def _fractions(values: Sequence) -> Tuple[Fraction, ...]:
    return tuple(as_fraction(v) for v in values)


@dataclass(frozen=True)
class PathInstance:
    """Путь x_0 < ... < x_n с ёмкостями рёбер и интервалами весов вершин"""
    positions: Tuple[Fraction, ...]
    capacities: Tuple[Fraction, ...]
    weight_lo: Tuple[Fraction, ...]
    weight_hi: Tuple[Fraction, ...]
    _capacity_table: SparseTable = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "positions", _fractions(self.positions))
        object.__setattr__(self, "capacities", _fractions(self.capacities))
        object.__setattr__(self, "weight_lo", _fractions(self.weight_lo))
        object.__setattr__(self, "weight_hi", _fractions(self.weight_hi))
        object.__setattr__(self, "_capacity_table", SparseTable(self.capacities))

    @classmethod
    def from_lengths(cls, lengths: Sequence, capacities: Sequence,
                     weight_lo: Sequence, weight_hi: Sequence) -> "PathInstance":
        """Путь по длинам рёбер d_i: x_i = d_0 + ... + d_{i-1}"""
        positions = [Fraction(0)]
        for d in _fractions(lengths):
            positions.append(positions[-1] + d)
        return cls(tuple(positions), tuple(capacities), tuple(weight_lo), tuple(weight_hi))

    @property
    def n(self) -> int:
        """Индекс последней вершины (число рёбер)"""
        return len(self.positions) - 1

    @property
    def vertex_count(self) -> int:
        return len(self.positions)

    def edge_length(self, k: int) -> Fraction:
        return self.positions[k + 1] - self.positions[k]

    @property
    def min_capacity_overall(self) -> Fraction:
        return min(self.capacities) if self.capacities else Fraction(1)

    def point(self, x) -> "Point":
        """Точка пути; индекс вершины заполняется, если x совпадает с вершиной"""
        x = as_fraction(x)
        if not self.positions or x < self.positions[0] or x > self.positions[-1]:
            raise InstanceError(f"Точка {x} вне пути")
        k = bisect_left(self.positions, x)
        index = k if k < len(self.positions) and self.positions[k] == x else None
        return Point(x, index)

    def check_index(self, i: int, name: str = "i") -> None:
        if not 0 <= i <= self.n:
            raise InstanceError(f"Индекс {name}={i} вне диапазона [0, {self.n}]")

    def check_scenario(self, s: "Scenario") -> None:
        if len(s.weights) != self.vertex_count:
            raise ScenarioError(
                f"Сценарий содержит {len(s.weights)} весов, а вершин {self.vertex_count}"
            )

    def lower_scenario(self) -> "Scenario":
        return Scenario(self.weight_lo)

    def upper_scenario(self) -> "Scenario":
        return Scenario(self.weight_hi)

    @property
    def max_interval_width(self) -> Fraction:
        return max((hi - lo for lo, hi in zip(self.weight_lo, self.weight_hi)), default=Fraction(0))


@dataclass(frozen=True)
class Scenario:
    """Неотрицательные веса вершин w_0(s), ..., w_n(s)"""
    weights: Tuple[Fraction, ...]
    _prefix: Tuple[Fraction, ...] = field(init=False, repr=False, compare=False)
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        weights = _fractions(self.weights)
        for i, w in enumerate(weights):
            if w < 0:
                raise ScenarioError(f"Вес w_{i} = {w} отрицателен")
        object.__setattr__(self, "weights", weights)
        prefix = [Fraction(0)]
        for w in weights:
            prefix.append(prefix[-1] + w)
        object.__setattr__(self, "_prefix", tuple(prefix))
        object.__setattr__(self, "_hash", hash(weights))

    # Сценарий - ключ кэша профилей
    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, i: int) -> Fraction:
        return self.weights[i]

    @property
    def total(self) -> Fraction:
        return self._prefix[-1]

    def range_weight(self, i: int, j: int) -> Fraction:
        """W_{i,j}(s) без проверок; пустой диапазон даёт 0"""
        if j < i:
            return Fraction(0)
        return self._prefix[j + 1] - self._prefix[i]

    def is_legal(self, instance: PathInstance) -> bool:
        """w_i^- <= w_i <= w_i^+ для всех i"""
        return len(self.weights) == instance.vertex_count and all(
            lo <= w <= hi for w, lo, hi in zip(self.weights, instance.weight_lo, instance.weight_hi)
        )


@dataclass(frozen=True)
class Point:
    value: Fraction
    vertex_index: Optional[int] = None


@dataclass(frozen=True)
class EvacResult:
    """Время эвакуации слева, справа и критические вершины"""
    theta_left: Fraction
    theta_right: Fraction
    lcv: Optional[int] = None
    rcv: Optional[int] = None
    theta: Fraction = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "theta", max(self.theta_left, self.theta_right))


@dataclass(frozen=True)
class OptSink:
    location: Point
    value: Fraction


@dataclass(frozen=True)
class ValidationIssue:
    """Нарушение инварианта пути"""
    code: str
    index: Optional[int]
    message: str
