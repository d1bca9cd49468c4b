"""
Графики: время эвакуации по положению стока, R_max по пути, кусочно-линейные функции
"""
from fractions import Fraction
from typing import List, Optional, Union

import numpy as np

from ..core.evacuation import optimal_sink, theta
from ..core.models import PathInstance, Scenario
from ..profile.models import Profile
from ..pwl import PartialPwl, PwlFunction
from ..regret.solver import RegretSolver
from .base import COLORS, PlotBase


def _sample_points(instance: PathInstance, samples: int) -> List[Fraction]:
    start, end = instance.positions[0], instance.positions[-1]
    points = set(instance.positions)
    points.update(start + (end - start) * Fraction(k, samples) for k in range(samples + 1))
    return sorted(points)


class EvacuationPlots(PlotBase):
    """Графики одного пути"""

    def __init__(self, instance: PathInstance):
        super().__init__()
        self.instance = instance

    def plot_theta(self, s: Scenario, path: str, samples: int = 256) -> str:
        """Theta, Theta_L и Theta_R как функции стока x; отмечен оптимальный сток"""
        points = _sample_points(self.instance, samples)
        results = [theta(self.instance, x, s) for x in points]
        xs = np.array([float(x) for x in points])

        fig, ax = self.figure('Время эвакуации', 'Сток x', 'Время')
        ax.plot(xs, [float(r.theta_left) for r in results], color=COLORS['left'], linewidth=1, label='Θ_L')
        ax.plot(xs, [float(r.theta_right) for r in results], color=COLORS['right'], linewidth=1, label='Θ_R')
        ax.plot(xs, [float(r.theta) for r in results], color=COLORS['curve'], linewidth=2, label='Θ')
        best = optimal_sink(self.instance, s)
        ax.scatter([float(best.location.value)], [float(best.value)], color=COLORS['optimum'], zorder=3)
        ax.legend()
        return self.save(fig, path)

    def plot_rmax(self, path: str, samples: int = 32, solver: Optional[RegretSolver] = None) -> str:
        """R_max(P, x) в вершинах и равномерных точках; отмечен R_OPT"""
        solver = solver or RegretSolver(self.instance)
        points = _sample_points(self.instance, samples)
        values = [solver.r_max(x).value for x in points]
        best = solver.r_opt()

        fig, ax = self.figure(f'Максимальное сожаление, R_OPT = {float(best.value):.4g}', 'Сток x', 'R_max')
        ax.plot([float(x) for x in points], [float(v) for v in values], color=COLORS['curve'], linewidth=2)
        vertex_values = [solver.r_max(x).value for x in self.instance.positions]
        ax.scatter([float(x) for x in self.instance.positions], [float(v) for v in vertex_values],
                   color=COLORS['vertex'], zorder=3)
        ax.scatter([float(best.location.value)], [float(best.value)], color=COLORS['optimum'], marker='*', s=150, zorder=4)
        return self.save(fig, path)


def plot_pwl(f: Union[PwlFunction, PartialPwl, Profile], path: str, title: str = '') -> str:
    """Кусочно-линейная функция по отрезкам; точка со скачком отмечается отдельно"""
    plots = PlotBase()
    if isinstance(f, Profile):
        f = f.partial
    segments = f.segments if isinstance(f, PartialPwl) else (f,)

    fig, ax = plots.figure(title, 'alpha')
    for segment in segments:
        ax.plot([float(x) for x in segment.xs], [float(y) for y in segment.ys],
                color=COLORS['curve'], linewidth=2, marker='o', markersize=3)
        if segment.left_value is not None:
            ax.scatter([float(segment.lo)], [float(segment.left_value)], color=COLORS['optimum'], zorder=3)
    return plots.save(fig, path)
