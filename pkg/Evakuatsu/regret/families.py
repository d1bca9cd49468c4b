"""
Слагаемые максимального сожаления: G_j, G_{i,j}, barG_{i,j} и зеркальные H_i, H_{i,j}, barH_{i,j}

Каждое слагаемое - максимум по ребру u разности "время эвакуации в x" минус
"минимальная эвакуация на ребре u" как функций изменяемого веса.
"""
from fractions import Fraction
from typing import Iterable, Optional, Tuple

from ..core.models import PathInstance
from ..core.path_model import Number, _value, substitute, two_varying
from ..profile import Box, Profile, ProfileManager, f_upper, f_upper_right, g_line, h_line
from ..pwl import Difference, PwlFunction, max_difference
from ..utils.errors import InstanceError
from .models import BAR_G_IJ, BAR_H_IJ, G_IJ, G_J, H_I, H_IJ, RegretWitness, Term


def _weights(instance: PathInstance, i: int) -> Tuple[Fraction, Fraction]:
    return instance.weight_lo[i], instance.weight_hi[i]


def _manager(instance: PathInstance, manager: Optional[ProfileManager]) -> ProfileManager:
    return manager if manager is not None else ProfileManager(instance)


def _best(upper: PwlFunction, edges: Iterable[Tuple[int, Profile]]) -> Optional[Tuple[int, Difference, Profile]]:
    """max по рёбрам u от max (upper - M_u); при равенстве остаётся меньшее u"""
    best: Optional[Tuple[int, Difference, Profile]] = None
    for u, profile in edges:
        diff = max_difference(upper, profile.partial)
        if best is None or diff.value > best[1].value or (
            diff.value == best[1].value and diff.attained and not best[1].attained
        ):
            best = (u, diff, profile)
    return best


def _check_left(instance: PathInstance, i: int, j: int, x: Fraction) -> None:
    instance.check_index(i)
    instance.check_index(j, "j")
    if not (i <= j and instance.positions[j] < x):
        raise InstanceError(f"Слагаемое G требует i <= j и x_j < x (i={i}, j={j}, x={x})")


def _check_right(instance: PathInstance, i: int, j: int, x: Fraction) -> None:
    instance.check_index(i)
    instance.check_index(j, "j")
    if not (i <= j and x < instance.positions[i]):
        raise InstanceError(f"Слагаемое H требует i <= j и x < x_i (i={i}, j={j}, x={x})")


# --- Одна изменяемая вершина ---
def term_G_j(instance: PathInstance, j: int, x: Number, manager: Optional[ProfileManager] = None) -> Term:
    """
    G_j(x) = max по u из [j, n) и alpha из [w_j^-, w_j^+] от g_j(x : s) - M^{(u)}_j(alpha),
    s = s_{j,j}(alpha, alpha)
    """
    x = _value(x)
    _check_left(instance, j, j, x)
    manager = _manager(instance, manager)
    lo, hi = _weights(instance, j)
    base = two_varying(instance, j, j, 0, 0)
    line = g_line(instance, j, x, j, base, (lo, hi))
    u, diff, _ = _best(line, ((u, manager.edge_single(j, u, base, (lo, hi))) for u in range(j, instance.n)))
    alpha = diff.argument
    return Term(diff.value, RegretWitness(
        G_J, j, j, u, alpha, alpha, substitute(base, j, alpha), diff.attained
    ))


def term_H_i(instance: PathInstance, i: int, x: Number, manager: Optional[ProfileManager] = None) -> Term:
    """Зеркальное G_j: h_i(x : s) - M^{(u)}_i(alpha) по рёбрам u из [0, i)"""
    x = _value(x)
    _check_right(instance, i, i, x)
    manager = _manager(instance, manager)
    lo, hi = _weights(instance, i)
    base = two_varying(instance, i, i, 0, 0)
    line = h_line(instance, i, x, i, base, (lo, hi))
    u, diff, _ = _best(line, ((u, manager.edge_single(i, u, base, (lo, hi))) for u in range(i)))
    alpha = diff.argument
    return Term(diff.value, RegretWitness(
        H_I, i, i, u, alpha, alpha, substitute(base, i, alpha), diff.attained
    ))


# --- Изменяемая вершина i при w_j = w_j^+ ---
def term_G_ij(instance: PathInstance, i: int, j: int, x: Number,
              manager: Optional[ProfileManager] = None) -> Term:
    """
    G_{i,j}(x): сценарий s_{i,j}(alpha, w_j^+), в x основное слагаемое g_j,
    минимум эвакуации берётся по y из [x_j, x_n]
    """
    x = _value(x)
    _check_left(instance, i, j, x)
    if i == j:
        raise InstanceError("G_{i,j} требует i < j")
    manager = _manager(instance, manager)
    lo, hi = _weights(instance, i)
    beta = instance.weight_hi[j]
    base = two_varying(instance, i, j, 0, beta)
    line = g_line(instance, j, x, i, base, (lo, hi))
    u, diff, _ = _best(line, ((u, manager.edge_single(i, u, base, (lo, hi))) for u in range(j, instance.n)))
    alpha = diff.argument
    return Term(diff.value, RegretWitness(
        G_IJ, i, j, u, alpha, beta, substitute(base, i, alpha), diff.attained
    ))


def term_H_ij(instance: PathInstance, i: int, j: int, x: Number,
              manager: Optional[ProfileManager] = None) -> Term:
    """Зеркальное G_{i,j}: сценарий s_{i,j}(w_i^+, alpha), основное слагаемое h_i"""
    x = _value(x)
    _check_right(instance, i, j, x)
    if i == j:
        raise InstanceError("H_{i,j} требует i < j")
    manager = _manager(instance, manager)
    lo, hi = _weights(instance, j)
    alpha = instance.weight_hi[i]
    base = two_varying(instance, i, j, alpha, 0)
    line = h_line(instance, i, x, j, base, (lo, hi))
    u, diff, _ = _best(line, ((u, manager.edge_single(j, u, base, (lo, hi))) for u in range(i)))
    beta = diff.argument
    return Term(diff.value, RegretWitness(
        H_IJ, i, j, u, alpha, beta, substitute(base, j, beta), diff.attained
    ))


# --- Две изменяемые вершины ---
def _two_varying_term(instance: PathInstance, family: str, i: int, j: int, upper: PwlFunction,
                      manager: ProfileManager) -> Term:
    box = Box(instance.weight_lo[i], instance.weight_hi[i], instance.weight_lo[j], instance.weight_hi[j])
    u, diff, profile = _best(upper, ((u, manager.edge(i, j, u, box)) for u in range(i, j)))
    split = profile.split_at(diff.argument)
    return Term(diff.value, RegretWitness(
        family, i, j, u, split.alpha1, split.alpha2,
        two_varying(instance, i, j, split.alpha1, split.alpha2), diff.attained
    ))


def term_barG_ij(instance: PathInstance, i: int, j: int, x: Number,
                 manager: Optional[ProfileManager] = None) -> Term:
    """
    barG_{i,j}(x) = max по u из [i, j) от max_alpha (F_{i,j}(alpha) - M^{(u)}_{i,j}(alpha))
    """
    x = _value(x)
    _check_left(instance, i, j, x)
    if i == j:
        raise InstanceError("barG_{i,j} требует i < j")
    return _two_varying_term(instance, BAR_G_IJ, i, j, f_upper(instance, i, j, x), _manager(instance, manager))


def term_barH_ij(instance: PathInstance, i: int, j: int, x: Number,
                 manager: Optional[ProfileManager] = None) -> Term:
    """Зеркальное barG_{i,j} с верхней функцией по h_t, x < x_t <= x_i"""
    x = _value(x)
    _check_right(instance, i, j, x)
    if i == j:
        raise InstanceError("barH_{i,j} требует i < j")
    return _two_varying_term(
        instance, BAR_H_IJ, i, j, f_upper_right(instance, i, j, x), _manager(instance, manager)
    )


# --- Значения ---
def eval_G_j(instance: PathInstance, j: int, x: Number, manager: Optional[ProfileManager] = None) -> Fraction:
    return term_G_j(instance, j, x, manager).value


def eval_H_i(instance: PathInstance, i: int, x: Number, manager: Optional[ProfileManager] = None) -> Fraction:
    return term_H_i(instance, i, x, manager).value


def eval_G_ij(instance: PathInstance, i: int, j: int, x: Number,
              manager: Optional[ProfileManager] = None) -> Fraction:
    return term_G_ij(instance, i, j, x, manager).value


def eval_H_ij(instance: PathInstance, i: int, j: int, x: Number,
              manager: Optional[ProfileManager] = None) -> Fraction:
    return term_H_ij(instance, i, j, x, manager).value


def eval_barG_ij(instance: PathInstance, i: int, j: int, x: Number,
                 manager: Optional[ProfileManager] = None) -> Fraction:
    return term_barG_ij(instance, i, j, x, manager).value


def eval_barH_ij(instance: PathInstance, i: int, j: int, x: Number,
                 manager: Optional[ProfileManager] = None) -> Fraction:
    return term_barH_ij(instance, i, j, x, manager).value
