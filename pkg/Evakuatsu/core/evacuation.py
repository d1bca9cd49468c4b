"""
Время эвакуации в замкнутой форме, критические вершины, оптимальный сток и сожаление
"""
from bisect import bisect_left, bisect_right
from fractions import Fraction
from typing import Optional, Tuple

from ..utils.errors import InstanceError
from .models import EvacResult, OptSink, PathInstance, Point, Scenario
from .path_model import Number, _value, min_capacity

ZERO = Fraction(0)


def g_i(instance: PathInstance, i: int, x: Number, s: Scenario) -> Fraction:
    """
    Время эвакуации в x веса вершин 0..i (x_i < x)

    Returns:
        Fraction: d(x_i, x) + W_{0,i}(s) / c(x_i, x), либо 0 при W_{0,i}(s) = 0
    """
    instance.check_index(i)
    x = _value(x)
    x_i = instance.positions[i]
    if not x_i < x:
        raise InstanceError(f"g_{i} определена только при x_{i} = {x_i} < x = {x}")
    weight = s.range_weight(0, i)
    if weight <= 0:
        return ZERO
    return (x - x_i) + weight / min_capacity(instance, x_i, x)


def h_i(instance: PathInstance, i: int, x: Number, s: Scenario) -> Fraction:
    """
    Время эвакуации в x веса вершин i..n (x < x_i)

    Returns:
        Fraction: d(x, x_i) + W_{i,n}(s) / c(x, x_i), либо 0 при W_{i,n}(s) = 0
    """
    instance.check_index(i)
    x = _value(x)
    x_i = instance.positions[i]
    if not x < x_i:
        raise InstanceError(f"h_{i} определена только при x = {x} < x_{i} = {x_i}")
    weight = s.range_weight(i, instance.n)
    if weight <= 0:
        return ZERO
    return (x_i - x) + weight / min_capacity(instance, x, x_i)


def _left_at_vertex(instance: PathInstance, k: int, s: Scenario) -> Tuple[Fraction, Optional[int]]:
    """Theta_L в вершине x_k и LCV (при равенстве ближайшая к x_k)"""
    x = instance.positions[k]
    best, lcv = ZERO, None
    for i in range(k):
        weight = s.range_weight(0, i)
        if weight <= 0:
            continue
        value = (x - instance.positions[i]) + weight / min_capacity(instance, instance.positions[i], x)
        if value >= best:
            best, lcv = value, i
    return best, lcv


def _right_at_vertex(instance: PathInstance, k: int, s: Scenario) -> Tuple[Fraction, Optional[int]]:
    """Theta_R в вершине x_k и RCV (при равенстве ближайшая к x_k)"""
    x = instance.positions[k]
    best, rcv = ZERO, None
    for i in range(instance.n, k, -1):
        weight = s.range_weight(i, instance.n)
        if weight <= 0:
            continue
        value = (instance.positions[i] - x) + weight / min_capacity(instance, x, instance.positions[i])
        if value >= best:
            best, rcv = value, i
    return best, rcv


def _locate(instance: PathInstance, x: Fraction) -> Tuple[Optional[int], int]:
    """(индекс вершины или None, индекс ребра, содержащего x)"""
    if not instance.positions or x < instance.positions[0] or x > instance.positions[-1]:
        raise InstanceError(f"Точка {x} вне пути [{instance.positions[0]}, {instance.positions[-1]}]")
    k = bisect_left(instance.positions, x)
    if k < len(instance.positions) and instance.positions[k] == x:
        return k, k
    return None, bisect_right(instance.positions, x) - 1


def theta(instance: PathInstance, x: Number, s: Scenario) -> EvacResult:
    """
    Theta(P, x : s) = max(Theta_L, Theta_R)

    Внутри ребра [x_j, x_{j+1}] значения получаются сдвигом вершинных:
    Theta_L(x) = Theta_L(x_{j+1}) - (x_{j+1} - x), Theta_R(x) = Theta_R(x_j) - (x - x_j).
    """
    instance.check_scenario(s)
    x = _value(x)
    vertex, j = _locate(instance, x)
    if vertex is not None:
        left, lcv = _left_at_vertex(instance, vertex, s)
        right, rcv = _right_at_vertex(instance, vertex, s)
        return EvacResult(left, right, lcv, rcv)

    left, lcv = _left_at_vertex(instance, j + 1, s)
    right, rcv = _right_at_vertex(instance, j, s)
    if left > 0:
        left -= instance.positions[j + 1] - x
    if right > 0:
        right -= x - instance.positions[j]
    return EvacResult(left, right, lcv, rcv)


def theta_min_on_edge(instance: PathInstance, k: int, s: Scenario) -> Tuple[Point, Fraction]:
    """
    min Theta(P, y : s) по y из [x_k, x_{k+1}]: минимум из значений в концах ребра
    и точки пересечения прямых Theta_L(x_{k+1}) - (x_{k+1} - y) и Theta_R(x_k) - (y - x_k)
    """
    if not 0 <= k < instance.n:
        raise InstanceError(f"Ребро {k} вне диапазона [0, {instance.n - 1}]")
    instance.check_scenario(s)
    x_k, x_next = instance.positions[k], instance.positions[k + 1]

    candidates = [(x_k, theta(instance, x_k, s).theta)]
    left_limit, _ = _left_at_vertex(instance, k + 1, s)
    right_limit, _ = _right_at_vertex(instance, k, s)
    if left_limit > 0 and right_limit > 0:
        crossing = (right_limit - left_limit + x_next + x_k) / 2
        if x_k < crossing < x_next:
            candidates.append((crossing, left_limit - (x_next - crossing)))
    candidates.append((x_next, theta(instance, x_next, s).theta))

    # Самый левый минимум
    best_x, best_value = candidates[0]
    for y, value in candidates[1:]:
        if value < best_value:
            best_x, best_value = y, value
    return instance.point(best_x), best_value


def optimal_sink(instance: PathInstance, s: Scenario) -> OptSink:
    """
    Оптимальный сток x_OPT(s) и Theta_OPT(P : s)

    Theta_L - Theta_R не убывает по вершинам, поэтому двоичный поиск находит последнюю
    вершину m с Theta_L(x_m) < Theta_R(x_m); минимум лежит на ребре [x_m, x_{m+1}].
    Проверяются это ребро и оба соседних. При нулевом суммарном весе сток x_0.
    """
    instance.check_scenario(s)
    n = instance.n
    lo, hi = -1, n
    while hi - lo > 1:
        mid = (lo + hi) // 2
        left, _ = _left_at_vertex(instance, mid, s)
        right, _ = _right_at_vertex(instance, mid, s)
        if left < right:
            lo = mid
        else:
            hi = mid

    if lo < 0 or n == 0:
        x0 = instance.positions[0]
        return OptSink(instance.point(x0), theta(instance, x0, s).theta)

    best: Optional[Tuple[Point, Fraction]] = None
    for k in (lo - 1, lo, lo + 1):
        if not 0 <= k < n:
            continue
        point, value = theta_min_on_edge(instance, k, s)
        if best is None or value < best[1] or (value == best[1] and point.value < best[0].value):
            best = (point, value)
    return OptSink(best[0], best[1])


def regret(instance: PathInstance, x: Number, s: Scenario) -> Fraction:
    """Сожаление Theta(P, x : s) - Theta_OPT(P : s) >= 0"""
    return theta(instance, x, s).theta - optimal_sink(instance, s).value
