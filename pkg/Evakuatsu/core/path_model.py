"""
Модель пути: проверка, префиксные веса, минимальная ёмкость, конструкторы сценариев
"""
import math
from bisect import bisect_left, bisect_right
from fractions import Fraction
from typing import List, Union

from ..utils.errors import InstanceError, ScenarioError
from ..utils.rational import as_fraction
from .models import PathInstance, Point, Scenario, ValidationIssue

Number = Union[Fraction, int, Point]


def _value(x: Number) -> Fraction:
    return x.value if isinstance(x, Point) else as_fraction(x)


def validate(instance: PathInstance) -> List[ValidationIssue]:
    """
    Проверяет все инварианты пути

    Returns:
        List[ValidationIssue]: пустой список, если путь корректен
    """
    issues: List[ValidationIssue] = []
    positions = instance.positions
    if not positions:
        issues.append(ValidationIssue("positions_empty", None, "путь не содержит вершин"))
        return issues
    if positions[0] != 0:
        issues.append(ValidationIssue("position_origin", 0, f"позиция x_0 = {positions[0]}, ожидалось 0"))
    for i in range(1, len(positions)):
        if positions[i] <= positions[i - 1]:
            issues.append(ValidationIssue(
                "positions_not_increasing", i,
                f"позиции не возрастают строго: x_{i - 1} = {positions[i - 1]}, x_{i} = {positions[i]}"
            ))
    if len(instance.capacities) != len(positions) - 1:
        issues.append(ValidationIssue(
            "capacity_count", None,
            f"ёмкостей {len(instance.capacities)}, а рёбер {len(positions) - 1}"
        ))
    for i, c in enumerate(instance.capacities):
        if c <= 0:
            issues.append(ValidationIssue("capacity_not_positive", i, f"ёмкость {i} не положительна ({c})"))
    for name, weights in (("weight_lo", instance.weight_lo), ("weight_hi", instance.weight_hi)):
        if len(weights) != len(positions):
            issues.append(ValidationIssue(
                "weight_count", None, f"{name}: весов {len(weights)}, а вершин {len(positions)}"
            ))
    for i, lo in enumerate(instance.weight_lo):
        if lo < 0:
            issues.append(ValidationIssue("weight_negative", i, f"нижний вес w_{i}^- = {lo} отрицателен"))
    for i, (lo, hi) in enumerate(zip(instance.weight_lo, instance.weight_hi)):
        if lo > hi:
            issues.append(ValidationIssue("weight_interval", i, f"w_{i}^- = {lo} больше w_{i}^+ = {hi}"))
    return issues


def prefix_weight(s: Scenario, i: int, j: int) -> Fraction:
    """W_{i,j}(s) = w_i + ... + w_j по префиксным суммам"""
    if not 0 <= i <= j < len(s.weights):
        raise InstanceError(f"Диапазон [{i}, {j}] вне сценария длины {len(s.weights)}")
    return s.range_weight(i, j)


def _capacity_range(instance: PathInstance, x: Number, x2: Number):
    a, b = _value(x), _value(x2)
    if a > b:
        raise InstanceError(f"Ожидалось x <= x', получено {a} > {b}")
    i = bisect_right(instance.positions, a) - 1
    j = bisect_left(instance.positions, b)
    return i, j


def min_capacity(instance: PathInstance, x: Number, x2: Number) -> Union[Fraction, float]:
    """
    c(x, x') = min{c_t : i <= t < j}, i = max{i': x_i' <= x}, j = min{j': x_j' >= x'}

    Returns:
        Fraction или math.inf, если диапазон рёбер пуст
    """
    i, j = _capacity_range(instance, x, x2)
    if j <= i:
        return math.inf
    return instance._capacity_table.query(i, j - 1)


def min_capacity_scan(instance: PathInstance, x: Number, x2: Number) -> Union[Fraction, float]:
    """Линейный просмотр того же диапазона рёбер (эталон для проверок)"""
    i, j = _capacity_range(instance, x, x2)
    best = math.inf
    for t in range(i, j):
        best = min(best, instance.capacities[t])
    return best


def two_varying(instance: PathInstance, i: int, j: int, alpha, beta) -> Scenario:
    """
    Сценарий s_{i,j}(alpha, beta): нижние веса вне [i, j], верхние строго внутри,
    w_i = alpha, w_j = beta
    """
    instance.check_index(i, "i")
    instance.check_index(j, "j")
    alpha, beta = as_fraction(alpha), as_fraction(beta)
    if i > j:
        raise ScenarioError(f"Ожидалось i <= j, получено i={i}, j={j}")
    if i == j and alpha != beta:
        raise ScenarioError(f"При i = j требуется alpha = beta ({alpha} != {beta})")
    if alpha < 0 or beta < 0:
        raise ScenarioError("Веса alpha и beta должны быть неотрицательны")
    weights = list(instance.weight_lo)
    for t in range(i + 1, j):
        weights[t] = instance.weight_hi[t]
    weights[i] = alpha
    weights[j] = beta
    return Scenario(tuple(weights))


def substitute(s: Scenario, i: int, alpha) -> Scenario:
    """s_{-i}(alpha): копия s с w_i = alpha"""
    if not 0 <= i < len(s.weights):
        raise InstanceError(f"Индекс {i} вне сценария длины {len(s.weights)}")
    alpha = as_fraction(alpha)
    if alpha < 0:
        raise ScenarioError(f"Вес {alpha} отрицателен")
    if s.weights[i] == alpha:
        return s
    weights = list(s.weights)
    weights[i] = alpha
    return Scenario(tuple(weights))


def shift(instance: PathInstance, s: Scenario, i: int, j: int, delta) -> Scenario:
    """
    SHIFT(i, j, delta): переносит delta единиц веса из вершины i в вершину j

    Raises:
        ScenarioError: если перенос недопустим (w_i - delta < w_i^- или w_j + delta > w_j^+)
    """
    instance.check_index(i, "i")
    instance.check_index(j, "j")
    instance.check_scenario(s)
    if i == j:
        raise ScenarioError("SHIFT требует i != j")
    delta = as_fraction(delta)
    if delta < 0:
        raise ScenarioError(f"delta = {delta} отрицательно")
    if s.weights[i] < instance.weight_lo[i] + delta:
        raise ScenarioError(f"Недопустимый SHIFT: w_{i} опустится ниже w_{i}^-")
    if s.weights[j] > instance.weight_hi[j] - delta:
        raise ScenarioError(f"Недопустимый SHIFT: w_{j} превысит w_{j}^+")
    if delta == 0:
        return s
    weights = list(s.weights)
    weights[i] -= delta
    weights[j] += delta
    return Scenario(tuple(weights))
