"""
Огибающие эвакуации LUE/RUE: время эвакуации как функция одного изменяемого веса
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..core.models import PathInstance, Scenario
from ..core.path_model import Number, _value, min_capacity, two_varying
from ..pwl import Line, PwlFunction, merge_max, upper_envelope
from ..utils.errors import ProfileError
from ..utils.rational import as_fraction

ZERO = Fraction(0)
LEFT = "left"
RIGHT = "right"


@dataclass(frozen=True)
class EnvelopeRequest:
    """Базовый сценарий, изменяемая вершина i, вершина j, сторона и область alpha"""
    base: Scenario
    varying: int
    vertex: int
    side: str
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", as_fraction(self.lo))
        object.__setattr__(self, "hi", as_fraction(self.hi))
        if self.side not in (LEFT, RIGHT):
            raise ProfileError(f"Неизвестная сторона {self.side!r}")
        if self.lo < 0 or self.lo > self.hi:
            raise ProfileError(f"Некорректная область alpha [{self.lo}, {self.hi}]")

    @property
    def domain(self) -> Tuple[Fraction, Fraction]:
        return self.lo, self.hi


def _domain(domain: Sequence) -> Tuple[Fraction, Fraction]:
    lo, hi = as_fraction(domain[0]), as_fraction(domain[1])
    if lo < 0 or lo > hi:
        raise ProfileError(f"Некорректная область alpha [{lo}, {hi}]")
    return lo, hi


def _assemble(constants: List[Fraction], varying: List[Tuple[Line, Fraction]],
              domain: Tuple[Fraction, Fraction], baseline: bool = True) -> PwlFunction:
    """
    Верхняя огибающая констант и прямых по alpha.

    varying - пары (прямая, вес без изменяемой вершины) в порядке неубывания наклона.
    Если этот вес нулевой, при alpha = 0 слагаемое обращается в 0, и значение
    в левом конце вычисляется отдельно.
    """
    lines = [Line(ZERO, ZERO)] if baseline else []
    lines.extend(Line(ZERO, value) for value in constants)
    lines.extend(line for line, _ in varying)
    if not lines:
        raise ProfileError("Пустой набор вершин для огибающей")
    envelope = upper_envelope(lines, domain)
    if domain[0] == 0 and any(rest == 0 for _, rest in varying):
        candidates = list(constants) + [line(ZERO) for line, rest in varying if rest > 0]
        exact = max(candidates, default=ZERO)
        if baseline:
            exact = max(exact, ZERO)
        envelope = PwlFunction.from_points(envelope.xs, envelope.ys, exact)
    return envelope


def _left_terms(instance: PathInstance, x: Fraction, i: int, s: Scenario, first: int = 0):
    """Слагаемые g_t(x : s_{-i}(alpha)) для first <= t, x_t < x"""
    constants: List[Fraction] = []
    varying: List[Tuple[Line, Fraction]] = []
    last = max((t for t in range(instance.vertex_count) if instance.positions[t] < x), default=-1)
    for t in range(last, first - 1, -1):
        capacity = min_capacity(instance, instance.positions[t], x)
        distance = x - instance.positions[t]
        if t >= i:
            rest = s.range_weight(0, t) - s.weights[i]
            varying.append((Line(1 / capacity, distance + rest / capacity, t), rest))
        else:
            weight = s.range_weight(0, t)
            if weight > 0:
                constants.append(distance + weight / capacity)
    return constants, varying


def _right_terms(instance: PathInstance, x: Fraction, i: int, s: Scenario, last: Optional[int] = None):
    """Слагаемые h_t(x : s_{-i}(alpha)) для x < x_t, t <= last"""
    n = instance.n
    last = n if last is None else last
    constants: List[Fraction] = []
    varying: List[Tuple[Line, Fraction]] = []
    first = min((t for t in range(instance.vertex_count) if instance.positions[t] > x), default=n + 1)
    for t in range(first, last + 1):
        capacity = min_capacity(instance, x, instance.positions[t])
        distance = instance.positions[t] - x
        if t <= i:
            rest = s.range_weight(t, n) - s.weights[i]
            varying.append((Line(1 / capacity, distance + rest / capacity, t), rest))
        else:
            weight = s.range_weight(t, n)
            if weight > 0:
                constants.append(distance + weight / capacity)
    return constants, varying


def left_envelope(instance: PathInstance, x: Number, i: int, s: Scenario, domain: Sequence) -> PwlFunction:
    """Theta_L(P, x : s_{-i}(alpha)) на области alpha"""
    instance.check_index(i)
    instance.check_scenario(s)
    constants, varying = _left_terms(instance, _value(x), i, s)
    return _assemble(constants, varying, _domain(domain))


def right_envelope(instance: PathInstance, x: Number, i: int, s: Scenario, domain: Sequence) -> PwlFunction:
    """Theta_R(P, x : s_{-i}(alpha)) на области alpha"""
    instance.check_index(i)
    instance.check_scenario(s)
    constants, varying = _right_terms(instance, _value(x), i, s)
    return _assemble(constants, varying, _domain(domain))


def lue(instance: PathInstance, req: EnvelopeRequest) -> PwlFunction:
    """
    LUE_{i,j}(alpha : s) = Theta_L(P, x_j : s_{-i}(alpha))

    При j = 0 слева нет вершин, результат - константа 0.
    """
    if req.side != LEFT:
        raise ProfileError("lue требует side = left")
    instance.check_index(req.vertex, "j")
    return left_envelope(instance, instance.positions[req.vertex], req.varying, req.base, req.domain)


def rue(instance: PathInstance, req: EnvelopeRequest) -> PwlFunction:
    """RUE_{i,j}(alpha : s) = Theta_R(P, x_j : s_{-i}(alpha))"""
    if req.side != RIGHT:
        raise ProfileError("rue требует side = right")
    instance.check_index(req.vertex, "j")
    return right_envelope(instance, instance.positions[req.vertex], req.varying, req.base, req.domain)


def theta_of_alpha(instance: PathInstance, x: Number, i: int, s: Scenario, domain: Sequence) -> PwlFunction:
    """Theta(P, x : s_{-i}(alpha)) = max левой и правой огибающих"""
    return merge_max(left_envelope(instance, x, i, s, domain), right_envelope(instance, x, i, s, domain))


def g_line(instance: PathInstance, t: int, x: Number, i: int, s: Scenario, domain: Sequence) -> PwlFunction:
    """g_t(x : s_{-i}(alpha)) при t >= i как функция alpha"""
    x = _value(x)
    instance.check_index(t, "t")
    if not instance.positions[t] < x or t < i:
        raise ProfileError(f"g_{t} по alpha требует x_{t} < x и t >= i (i={i})")
    constants, varying = _left_terms(instance, x, i, s, first=t)
    return _assemble([], varying[-1:], _domain(domain), baseline=False)


def h_line(instance: PathInstance, t: int, x: Number, i: int, s: Scenario, domain: Sequence) -> PwlFunction:
    """h_t(x : s_{-i}(alpha)) при t <= i как функция alpha"""
    x = _value(x)
    instance.check_index(t, "t")
    if not x < instance.positions[t] or t > i:
        raise ProfileError(f"h_{t} по alpha требует x < x_{t} и t <= i (i={i})")
    constants, varying = _right_terms(instance, x, i, s, last=t)
    return _assemble([], varying[-1:], _domain(domain), baseline=False)


def f_upper(instance: PathInstance, i: int, j: int, x: Number, domain: Optional[Sequence] = None) -> PwlFunction:
    """
    F_{i,j}(alpha) = max по t с x_j <= x_t < x слагаемых g_t(x : s_{i,j}(alpha1, alpha2)),
    alpha = alpha1 + alpha2; базовый сценарий s_{i,j}(0, 0)
    """
    x = _value(x)
    instance.check_index(i)
    instance.check_index(j, "j")
    if not (i < j and instance.positions[j] < x):
        raise ProfileError(f"F_{{{i},{j}}} требует i < j и x_j < x (x = {x})")
    if domain is None:
        domain = (instance.weight_lo[i] + instance.weight_lo[j], instance.weight_hi[i] + instance.weight_hi[j])
    base = two_varying(instance, i, j, 0, 0)
    # При i < j <= t оба изменяемых веса входят в W_{0,t}
    constants, varying = _left_terms(instance, x, i, base, first=j)
    return _assemble([], varying, _domain(domain), baseline=False)


def f_upper_right(instance: PathInstance, i: int, j: int, x: Number, domain: Optional[Sequence] = None) -> PwlFunction:
    """Зеркальная F: max по t с x < x_t <= x_i слагаемых h_t(x : s_{i,j}(alpha1, alpha2))"""
    x = _value(x)
    instance.check_index(i)
    instance.check_index(j, "j")
    if not (i < j and x < instance.positions[i]):
        raise ProfileError(f"Зеркальная F_{{{i},{j}}} требует i < j и x < x_i (x = {x})")
    if domain is None:
        domain = (instance.weight_lo[i] + instance.weight_lo[j], instance.weight_hi[i] + instance.weight_hi[j])
    base = two_varying(instance, i, j, 0, 0)
    constants, varying = _right_terms(instance, x, j, base, last=i)
    return _assemble([], varying, _domain(domain), baseline=False)
