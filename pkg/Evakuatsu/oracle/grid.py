"""
Переборные оракулы: сетка по двухпараметрическим сценариям и по разбиениям веса
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..core.evacuation import regret
from ..core.models import PathInstance, Point, Scenario
from ..core.path_model import Number, _value, two_varying
from ..profile.models import Box
from ..pwl import PwlFunction
from ..utils.config_loader import SolverSettings, SolverState
from ..utils.errors import OracleError
from ..utils.rational import as_fraction


@dataclass(frozen=True)
class GridConfig:
    """Шаг сетки h; концы интервалов и 0 всегда входят в сетку"""
    h: Fraction

    def __post_init__(self):
        object.__setattr__(self, "h", as_fraction(self.h))
        if self.h <= 0:
            raise OracleError(f"Шаг сетки h = {self.h} должен быть положительным")

    @classmethod
    def for_instance(cls, instance: PathInstance, settings: Optional[SolverSettings] = None) -> "GridConfig":
        """h = (максимальная ширина интервала веса) / grid_divisions"""
        settings = settings or SolverState.settings()
        width = instance.max_interval_width
        return cls(width / settings.grid_divisions if width > 0 else Fraction(1))

    def values(self, lo, hi) -> List[Fraction]:
        """lo, lo + h, lo + 2h, ... , hi и 0, если он внутри [lo, hi]"""
        lo, hi = as_fraction(lo), as_fraction(hi)
        points = {lo, hi}
        if lo <= 0 <= hi:
            points.add(Fraction(0))
        value = lo + self.h
        while value < hi:
            points.add(value)
            value += self.h
        return sorted(points)


def _pair_scenarios(instance: PathInstance, cfg: GridConfig):
    for i in range(instance.vertex_count):
        for alpha in cfg.values(instance.weight_lo[i], instance.weight_hi[i]):
            yield two_varying(instance, i, i, alpha, alpha)
    for i in range(instance.vertex_count):
        alphas = cfg.values(instance.weight_lo[i], instance.weight_hi[i])
        for j in range(i + 1, instance.vertex_count):
            betas = cfg.values(instance.weight_lo[j], instance.weight_hi[j])
            for alpha in alphas:
                for beta in betas:
                    yield two_varying(instance, i, j, alpha, beta)


def grid_rmax_scenario(instance: PathInstance, x: Number, cfg: GridConfig) -> Tuple[Fraction, Scenario]:
    """Максимум сожаления по сетке и сценарий, на котором он достигается (первый при равенстве)"""
    x = _value(x)
    best: Optional[Tuple[Fraction, Scenario]] = None
    for s in _pair_scenarios(instance, cfg):
        value = regret(instance, x, s)
        if best is None or value > best[0]:
            best = (value, s)
    return best


def grid_rmax(instance: PathInstance, x: Number, cfg: GridConfig) -> Fraction:
    """
    max по парам (i, j) и точкам сетки (alpha, beta) от regret(x, s_{i,j}(alpha, beta))

    Сетка - подмножество допустимых сценариев, поэтому результат не больше R_max(P, x).
    """
    return grid_rmax_scenario(instance, x, cfg)[0]


def sweep_ropt(instance: PathInstance, cfg: GridConfig, x_samples: int) -> Tuple[Point, Fraction]:
    """
    min grid_rmax по вершинам и x_samples равномерным точкам пути (самый левый минимум)

    Raises:
        OracleError: если x_samples < n + 1
    """
    if x_samples < instance.n + 1:
        raise OracleError(f"Нужно не меньше {instance.n + 1} точек, получено {x_samples}")
    start, end = instance.positions[0], instance.positions[-1]
    points = set(instance.positions)
    points.update(start + (end - start) * Fraction(k, x_samples) for k in range(x_samples + 1))
    best: Optional[Tuple[Fraction, Fraction]] = None
    for x in sorted(points):
        value = grid_rmax(instance, x, cfg)
        if best is None or value < best[1]:
            best = (x, value)
    return instance.point(best[0]), best[1]


# --- Профили минимальной эвакуации ---
def _slice_grid(box: Box, alpha: Fraction, h: Fraction) -> List[Fraction]:
    lo, hi = box.slice(alpha)
    if lo > hi:
        raise OracleError(f"alpha = {alpha} вне области прямоугольника")
    return GridConfig(h).values(lo, hi)


def grid_min_max(f_left: PwlFunction, f_right: PwlFunction, box: Box, alpha, h) -> Fraction:
    """min по сетке alpha1 на диагонали B(alpha) от max(fL(alpha1), fR(alpha - alpha1))"""
    alpha, h = as_fraction(alpha), as_fraction(h)
    return min(
        max(f_left(a1), f_right(alpha - a1))
        for a1 in _slice_grid(box, alpha, h)
    )


def grid_min_max_y(f_left: PwlFunction, f_right: PwlFunction, box: Box, y_range: Sequence, alpha, h) -> Fraction:
    """min по сетке (alpha1, y) от max(fL(alpha1) + y, fR(alpha - alpha1) - y)"""
    alpha, h = as_fraction(alpha), as_fraction(h)
    ys = GridConfig(h).values(y_range[0], y_range[1])
    best: Optional[Fraction] = None
    for a1 in _slice_grid(box, alpha, h):
        left, right = f_left(a1), f_right(alpha - a1)
        for y in ys:
            value = max(left + y, right - y)
            if best is None or value < best:
                best = value
    return best
