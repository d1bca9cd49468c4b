"""
Операции над кусочно-линейными функциями: огибающие, обращение, сумма, сдвиги,
поточечные минимум/максимум и максимум разности
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..utils.errors import PwlError
from ..utils.rational import as_fraction
from .function import Line, PartialPwl, PwlFunction


# --- Огибающая ---
def upper_envelope(lines: Sequence[Line], interval: Tuple) -> PwlFunction:
    """
    Поточечный максимум прямых на отрезке за один проход стеком

    Args:
        lines: прямые с неубывающими наклонами
        interval: (a, b)
    Returns:
        PwlFunction: не более стольких кусков, сколько различных наклонов
    """
    if not lines:
        raise PwlError("Пустой набор прямых")
    a, b = as_fraction(interval[0]), as_fraction(interval[1])
    if a > b:
        raise PwlError(f"Пустой отрезок [{a}, {b}]")

    # Из прямых с равным наклоном остаётся одна, с наибольшим свободным членом
    distinct: List[Line] = []
    for line in lines:
        if distinct and line.slope < distinct[-1].slope:
            raise PwlError("Наклоны прямых должны не убывать")
        if distinct and line.slope == distinct[-1].slope:
            if line.intercept > distinct[-1].intercept:
                distinct[-1] = line
            continue
        distinct.append(line)

    hull: List[Line] = []
    for line in distinct:
        while len(hull) >= 2 and hull[-1].crossing(line) <= hull[-2].crossing(hull[-1]):
            hull.pop()
        hull.append(line)
    breaks = [hull[k].crossing(hull[k + 1]) for k in range(len(hull) - 1)]

    active = 0
    while active < len(breaks) and breaks[active] <= a:
        active += 1
    xs, ys = [a], [hull[active](a)]
    for k in range(active, len(breaks)):
        if breaks[k] >= b:
            break
        xs.append(breaks[k])
        ys.append(hull[k](breaks[k]))
        active = k + 1
    if b > a:
        xs.append(b)
        ys.append(hull[active](b))
    return PwlFunction.from_points(xs, ys)


# --- Унарные операции ---
def inverse(f: PwlFunction) -> PwlFunction:
    """Обратная функция к положительной f на [f(a), f(b)]"""
    if f.left_value is not None:
        raise PwlError("Обращение функции со скачком в левом конце невозможно")
    if not f.is_positive:
        raise PwlError("Обращение требует положительной функции (все наклоны > 0)")
    return PwlFunction(f.ys, f.xs)


def scale(f: PwlFunction, c) -> PwlFunction:
    """c * f при c > 0"""
    c = as_fraction(c)
    if c <= 0:
        raise PwlError(f"Множитель {c} должен быть положительным")
    left = f.left_value * c if f.left_value is not None else None
    return PwlFunction(f.xs, tuple(y * c for y in f.ys), left)


def shift_arg(f: PwlFunction, c) -> PwlFunction:
    """alpha -> f(alpha - c) на [a + c, b + c]"""
    c = as_fraction(c)
    return PwlFunction(tuple(x + c for x in f.xs), f.ys, f.left_value)


def add_line(f: PwlFunction, line: Line) -> PwlFunction:
    """f + прямая"""
    left = f.left_value + line(f.lo) if f.left_value is not None else None
    return PwlFunction.from_points(f.xs, [y + line(x) for x, y in zip(f.xs, f.ys)], left)


def add_constant(f: PwlFunction, c) -> PwlFunction:
    return add_line(f, Line(Fraction(0), as_fraction(c)))


def restrict(f: PwlFunction, lo, hi) -> PwlFunction:
    """Сужение f на [lo, hi]"""
    lo, hi = as_fraction(lo), as_fraction(hi)
    if lo > hi or lo < f.lo or hi > f.hi:
        raise PwlError(f"Отрезок [{lo}, {hi}] не лежит в области [{f.lo}, {f.hi}]")
    xs = [lo] + [x for x in f.xs if lo < x < hi] + ([hi] if hi > lo else [])
    left = f.left_value if lo == f.lo else None
    return PwlFunction.from_points(xs, _sample(f, xs), left)


# --- Бинарные операции ---
def _overlap(f: PwlFunction, g: PwlFunction) -> Tuple[Fraction, Fraction]:
    lo, hi = max(f.lo, g.lo), min(f.hi, g.hi)
    if lo > hi:
        raise PwlError(f"Области [{f.lo}, {f.hi}] и [{g.lo}, {g.hi}] не пересекаются")
    return lo, hi


def _merged_breaks(functions: Sequence[PwlFunction], lo: Fraction, hi: Fraction) -> List[Fraction]:
    points = {lo, hi}
    for f in functions:
        points.update(x for x in f.xs if lo < x < hi)
    return sorted(points)


def _sample(f: PwlFunction, xs: Sequence[Fraction]) -> List[Fraction]:
    """Значения продолжения f в упорядоченных точках xs одним проходом"""
    values = []
    k = 0
    last = len(f.xs) - 1
    for x in xs:
        while k < last and f.xs[k + 1] <= x:
            k += 1
        if k == last:
            values.append(f.ys[last])
        else:
            x1, x2, y1, y2 = f.xs[k], f.xs[k + 1], f.ys[k], f.ys[k + 1]
            values.append(y1 + (y2 - y1) * (x - x1) / (x2 - x1))
    return values


def add(f: PwlFunction, g: PwlFunction) -> PwlFunction:
    """f + g на пересечении областей"""
    lo, hi = _overlap(f, g)
    xs = _merged_breaks((f, g), lo, hi)
    ys = [u + v for u, v in zip(_sample(f, xs), _sample(g, xs))]
    return PwlFunction.from_points(xs, ys, f(lo) + g(lo))


def merge_max(f: PwlFunction, g: PwlFunction) -> PwlFunction:
    """Поточечный максимум на пересечении областей"""
    lo, hi = _overlap(f, g)
    xs = _merged_breaks((f, g), lo, hi)
    fv, gv = _sample(f, xs), _sample(g, xs)
    out_x, out_y = [xs[0]], [max(fv[0], gv[0])]
    for k in range(1, len(xs)):
        d0, d1 = fv[k - 1] - gv[k - 1], fv[k] - gv[k]
        if d0 * d1 < 0:
            t = xs[k - 1] + (xs[k] - xs[k - 1]) * d0 / (d0 - d1)
            out_x.append(t)
            out_y.append(fv[k - 1] + (fv[k] - fv[k - 1]) * (t - xs[k - 1]) / (xs[k] - xs[k - 1]))
        out_x.append(xs[k])
        out_y.append(max(fv[k], gv[k]))
    return PwlFunction.from_points(out_x, out_y, max(f(lo), g(lo)))


def _lower_points(values: List[Tuple[Fraction, Fraction]], p: Fraction, q: Fraction):
    """Нижняя огибающая отрезков прямых на [p, q], заданных значениями в концах"""
    width = q - p
    current = min(values, key=lambda v: (v[0], v[1]))
    points = [(p, current[0])]
    x = p
    while True:
        best_t, best = None, None
        for other in values:
            if other[1] >= current[1]:
                continue
            # other заканчивается ниже current: единственное пересечение на (x, q)
            t = p + width * (other[0] - current[0]) / ((current[1] - current[0]) - (other[1] - other[0]))
            if t <= x:
                continue
            if best_t is None or t < best_t or (t == best_t and other[1] < best[1]):
                best_t, best = t, other
        if best is None:
            break
        points.append((best_t, current[0] + (current[1] - current[0]) * (best_t - p) / width))
        current, x = best, best_t
    points.append((q, current[1]))
    return points


def merge_min(fs: Sequence[Union[PartialPwl, PwlFunction, None]]) -> PartialPwl:
    """
    Поточечный минимум частичных функций (+inf вне областей) на объединении областей

    Скачки вниз внутри области представлены границами отрезков результата.
    """
    segments = PartialPwl.of(fs)
    if not segments:
        return PartialPwl(())
    segments.sort(key=lambda f: (f.lo, f.hi))
    cuts = sorted({x for f in segments for x in f.xs})

    exact: Dict[Fraction, Fraction] = {}
    for f in segments:
        for x in f.xs:
            value = f(x)
            if x not in exact or value < exact[x]:
                exact[x] = value

    # Элементарные отрезки между соседними точками разреза
    pieces = []
    started = 0
    active: List[PwlFunction] = []
    for p, q in zip(cuts, cuts[1:]):
        while started < len(segments) and segments[started].lo <= p:
            if not segments[started].is_point:
                active.append(segments[started])
            started += 1
        active = [f for f in active if f.hi > p]
        covering = [f for f in active if f.hi >= q]
        if not covering:
            continue
        values = [(f.limit_at(p), f.limit_at(q)) for f in covering]
        pieces.append((p, q, _lower_points(values, p, q)))

    out: List[PwlFunction] = []
    chain: Optional[List[Tuple[Fraction, Fraction]]] = None
    chain_left: Optional[Fraction] = None
    prev_q: Optional[Fraction] = None
    for p, q, points in pieces:
        e = exact[p]
        if chain is not None and prev_q == p and chain[-1][1] == points[0][1] == e:
            chain.extend(points[1:])
        else:
            if chain is not None:
                out.append(_chain_function(chain, chain_left))
            chain = list(points)
            chain_left = e if e < points[0][1] else None
        prev_q = q
    if chain is not None:
        out.append(_chain_function(chain, chain_left))

    # Изолированные точки и скачки вниз в правых концах
    result = PartialPwl(tuple(out))
    extra = [
        PwlFunction((x,), (value,))
        for x, value in exact.items()
        if value < result(x)
    ]
    if extra:
        result = PartialPwl(tuple(out) + tuple(extra))
    return result


def _chain_function(points, left_value) -> PwlFunction:
    return PwlFunction.from_points([p[0] for p in points], [p[1] for p in points], left_value)


# --- Максимум разности ---
@dataclass(frozen=True)
class Difference:
    """
    Максимум f - g: значение, аргумент и признак достижимости.
    attained = False, если максимум - предел справа в левом конце со скачком.
    """
    value: Fraction
    argument: Fraction
    attained: bool = True


def max_difference(f: PwlFunction, g: Union[PwlFunction, PartialPwl],
                   interval: Optional[Tuple] = None) -> Difference:
    """
    max (f - g) на отрезке: разность линейна между объединёнными точками излома,
    поэтому достаточно концов. При равенстве выбирается меньший аргумент.

    g может быть частичной функцией: вне её отрезков значение +inf не участвует.
    """
    if isinstance(g, PartialPwl):
        lo, hi = f.domain if interval is None else (as_fraction(interval[0]), as_fraction(interval[1]))
        best: Optional[Difference] = None
        for segment in g.segments:
            a, b = max(lo, segment.lo), min(hi, segment.hi)
            if a > b:
                continue
            candidate = max_difference(f, segment, (a, b))
            if best is None or candidate.value > best.value or (
                candidate.value == best.value and candidate.attained and not best.attained
            ):
                best = candidate
        if best is None:
            raise PwlError(f"Частичная функция не определена на [{lo}, {hi}]")
        return best

    if interval is None:
        lo, hi = _overlap(f, g)
    else:
        lo, hi = as_fraction(interval[0]), as_fraction(interval[1])
        if lo > hi or not (f.contains(lo) and f.contains(hi) and g.contains(lo) and g.contains(hi)):
            raise PwlError(f"Отрезок [{lo}, {hi}] вне областей функций")
    xs = _merged_breaks((f, g), lo, hi)
    best = Difference(f(lo) - g(lo), lo, True)
    for x, u, v in zip(xs, _sample(f, xs), _sample(g, xs)):
        if u - v > best.value:
            best = Difference(u - v, x, x != lo)
    return best
