"""
Случайные пути и сценарии, проверка монотонности SHIFT и унимодальности
"""
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..core.evacuation import theta
from ..core.models import PathInstance, Scenario
from ..core.path_model import shift
from ..pwl import PwlFunction
from ..utils.config_loader import SolverState


def _rational(rng: np.random.Generator, lo: Fraction, hi: Fraction, denominator: int = 8) -> Fraction:
    """Случайная дробь со знаменателем denominator из [lo, hi]"""
    a = math.ceil(lo * denominator)
    b = math.floor(hi * denominator)
    return Fraction(int(rng.integers(a, b + 1)), denominator)


def random_instance(rng: np.random.Generator, n: int, lo=Fraction(1, 4), hi=Fraction(4)) -> PathInstance:
    """
    Случайный путь из n рёбер: длины и ёмкости из [lo, hi],
    интервалы весов [w^-, w^+] c w^- и шириной из [0, hi]
    """
    lo, hi = Fraction(lo), Fraction(hi)
    lengths = [_rational(rng, lo, hi) for _ in range(n)]
    capacities = [_rational(rng, lo, hi) for _ in range(n)]
    weight_lo = [_rational(rng, Fraction(0), hi) for _ in range(n + 1)]
    weight_hi = [w + _rational(rng, Fraction(0), hi) for w in weight_lo]
    return PathInstance.from_lengths(lengths, capacities, weight_lo, weight_hi)


def random_scenario(rng: np.random.Generator, instance: PathInstance, steps: int = 8) -> Scenario:
    """Допустимый сценарий: w_i = w_i^- + (w_i^+ - w_i^-) * k / steps"""
    weights = [
        lo + (hi - lo) * Fraction(int(rng.integers(0, steps + 1)), steps)
        for lo, hi in zip(instance.weight_lo, instance.weight_hi)
    ]
    return Scenario(tuple(weights))


def random_positive_pwl(rng: np.random.Generator, lo, hi, size: int, convex: bool = False) -> PwlFunction:
    """
    Случайная положительная функция не более чем из size кусков на [lo, hi]

    convex=True даёт строго возрастающие наклоны.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if lo == hi:
        return PwlFunction((lo,), (_rational(rng, Fraction(0), Fraction(4)),))
    inner = {lo + (hi - lo) * Fraction(int(k), 16) for k in rng.integers(1, 16, size=max(size - 1, 0))}
    xs = [lo] + sorted(inner) + [hi]
    slopes = sorted({_rational(rng, Fraction(1, 4), Fraction(4)) for _ in range(len(xs) - 1)})
    if convex:
        xs = xs[:len(slopes) + 1]
        xs[-1] = hi
    else:
        slopes = [slopes[int(k)] for k in rng.integers(0, len(slopes), size=len(xs) - 1)]
    ys = [_rational(rng, Fraction(0), Fraction(4))]
    for k, slope in enumerate(slopes):
        ys.append(ys[-1] + slope * (xs[k + 1] - xs[k]))
    return PwlFunction.from_points(xs, ys)


# --- SHIFT ---
@dataclass(frozen=True)
class ShiftViolation:
    i: int
    j: int
    delta: Fraction
    x: Fraction
    before: Fraction
    after: Fraction


@dataclass
class ShiftReport:
    """Итог проверки: сколько переносов проверено, пропущено и нарушений"""
    trials: int
    checked: int = 0
    skipped: int = 0
    violations: List[ShiftViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_shift(instance: PathInstance, trials: Optional[int] = None, seed: Optional[int] = None) -> ShiftReport:
    """
    Случайные допустимые SHIFT(i, j, delta): перенос веса к стоку не увеличивает время эвакуации

    При i < j сток x выбирается из [x_j, x_n], при j < i - из [x_0, x_j].
    Пары i = j пропускаются.
    """
    settings = SolverState.settings()
    trials = settings.shift_trials if trials is None else trials
    seed = settings.seed if seed is None else seed
    rng = np.random.default_rng(seed)
    report = ShiftReport(trials)
    positions = instance.positions
    for _ in range(trials):
        i, j = (int(v) for v in rng.integers(0, instance.vertex_count, size=2))
        if i == j:
            report.skipped += 1
            continue
        s = random_scenario(rng, instance)
        room = min(s.weights[i] - instance.weight_lo[i], instance.weight_hi[j] - s.weights[j])
        delta = room * Fraction(int(rng.integers(0, 17)), 16)
        moved = shift(instance, s, i, j, delta)
        t = Fraction(int(rng.integers(0, 65)), 64)
        if i < j:
            x = positions[j] + (positions[-1] - positions[j]) * t
        else:
            x = positions[0] + (positions[j] - positions[0]) * t
        before = theta(instance, x, s).theta
        after = theta(instance, x, moved).theta
        report.checked += 1
        if after > before:
            report.violations.append(ShiftViolation(i, j, delta, x, before, after))
    return report


# --- Унимодальность ---
def theta_sampled(instance: PathInstance, s: Scenario, samples: int = 64) -> List[Tuple[Fraction, Fraction]]:
    """Theta(P, x : s) в вершинах и samples + 1 равномерных точках"""
    start, end = instance.positions[0], instance.positions[-1]
    points = set(instance.positions)
    points.update(start + (end - start) * Fraction(k, samples) for k in range(samples + 1))
    return [(x, theta(instance, x, s).theta) for x in sorted(points)]


def is_unimodal(values: Sequence) -> bool:
    """Нет строгого локального максимума: v[a] < v[b] > v[c] при a < b < c"""
    values = list(values)
    if len(values) < 3:
        return True
    suffix = list(values)
    for k in range(len(values) - 2, -1, -1):
        suffix[k] = min(values[k], suffix[k + 1])
    prefix = values[0]
    for k in range(1, len(values) - 1):
        if values[k] > prefix and values[k] > suffix[k + 1]:
            return False
        prefix = min(prefix, values[k])
    return True
