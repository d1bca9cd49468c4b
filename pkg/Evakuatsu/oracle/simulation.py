"""
Пошаговая жидкостная модель эвакуации для проверки формул времени эвакуации
"""
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Deque, List, Optional, Tuple

from ..core.models import PathInstance, Scenario
from ..core.path_model import Number, _value
from ..utils.config_loader import SolverSettings, SolverState
from ..utils.errors import OracleError
from ..utils.rational import as_fraction


@dataclass(frozen=True)
class SimConfig:
    """Шаг по времени dt и предел времени симуляции"""
    dt: Fraction
    max_time: Fraction = Fraction(10_000)

    def __post_init__(self):
        object.__setattr__(self, "dt", as_fraction(self.dt))
        object.__setattr__(self, "max_time", as_fraction(self.max_time))
        if self.dt <= 0:
            raise OracleError(f"Шаг dt = {self.dt} должен быть положительным")
        if self.max_time <= 0:
            raise OracleError(f"Предел времени {self.max_time} должен быть положительным")

    @classmethod
    def for_instance(cls, instance: PathInstance, settings: Optional[SolverSettings] = None) -> "SimConfig":
        """dt = (минимальная длина ребра) / dt_divisions"""
        settings = settings or SolverState.settings()
        lengths = [instance.edge_length(k) for k in range(instance.n)]
        shortest = min(lengths) if lengths else Fraction(1)
        return cls(shortest / settings.dt_divisions, Fraction(settings.max_time))


# Звено цепочки: индекс вершины, длина участка до следующего узла, ёмкость участка
Link = Tuple[int, Fraction, Fraction]


def _left_chain(instance: PathInstance, x: Fraction) -> List[Link]:
    """Вершины слева от x, от дальней к ближней"""
    positions = instance.positions
    left = [t for t in range(instance.vertex_count) if positions[t] < x]
    chain = []
    for t in left:
        end = positions[t + 1] if t + 1 in left else x
        chain.append((t, end - positions[t], instance.capacities[t]))
    return chain


def _right_chain(instance: PathInstance, x: Fraction) -> List[Link]:
    """Вершины справа от x, от дальней к ближней"""
    positions = instance.positions
    right = [t for t in range(instance.vertex_count) if positions[t] > x]
    chain = []
    for t in reversed(right):
        end = positions[t - 1] if t - 1 in right else x
        chain.append((t, positions[t] - end, instance.capacities[t - 1]))
    return chain


def _drain(chain: List[Link], s: Scenario, dt: Fraction, max_steps: int) -> int:
    """
    Номер шага, на котором в сток приходит последняя порция (0, если веса нет)

    На каждом шаге сначала доставляются прибывшие порции, затем каждый узел
    отправляет min(запас, c * dt) в свой участок; порция прибывает через
    1 + ceil(d / dt) шагов.
    """
    buffers = [s.weights[t] for t, _, _ in chain]
    remaining = sum(buffers, Fraction(0))
    if remaining == 0:
        return 0
    travel = [math.ceil(length / dt) for _, length, _ in chain]
    rate = [capacity * dt for _, _, capacity in chain]
    queues: List[Deque[Tuple[Fraction, int]]] = [deque() for _ in chain]
    last = len(chain) - 1
    absorbed_at = 0
    step = 0
    while remaining > 0:
        if step > max_steps:
            raise OracleError(f"Симуляция не завершилась за {max_steps} шагов")
        for k, queue in enumerate(queues):
            while queue and queue[0][1] <= step:
                amount, _ = queue.popleft()
                if k == last:
                    remaining -= amount
                    absorbed_at = step
                else:
                    buffers[k + 1] += amount
        for k in range(len(chain)):
            if buffers[k] > 0:
                amount = min(buffers[k], rate[k])
                buffers[k] -= amount
                queues[k].append((amount, step + 1 + travel[k]))
        step += 1
    return absorbed_at


def simulate_evacuation(instance: PathInstance, x: Number, s: Scenario, cfg: SimConfig) -> Fraction:
    """
    Время эвакуации в сток x по жидкостной модели с шагом dt

    Вес в самой точке x поглощается в момент 0. Слева и справа поток
    движется независимо, ответ - позднее из двух времён.

    Raises:
        OracleError: если предел времени превышен
    """
    instance.check_scenario(s)
    x = _value(x)
    instance.point(x)
    max_steps = math.ceil(cfg.max_time / cfg.dt)
    left = _drain(_left_chain(instance, x), s, cfg.dt, max_steps)
    right = _drain(_right_chain(instance, x), s, cfg.dt, max_steps)
    return max(left, right) * cfg.dt
