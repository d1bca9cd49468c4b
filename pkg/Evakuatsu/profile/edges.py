"""
Профили на вершине и на ребре: M_k, M^{(k)}_{i,j} и M^{(k)}_j

Каждая функция принимает необязательный ProfileManager: через него огибающие
LUE/RUE и профили M_k строятся один раз для всех рёбер пары (i, j).
"""
from typing import TYPE_CHECKING, Optional, Sequence

from ..core.models import PathInstance, Scenario
from ..core.path_model import two_varying
from ..pwl import PwlFunction, add_constant
from ..utils.errors import ProfileError
from ..utils.rational import as_fraction
from .envelopes import LEFT, RIGHT, left_envelope, right_envelope
from .models import Box, Profile
from .witnesses import min_max_profile, min_max_y_profile

if TYPE_CHECKING:
    from .manager import ProfileManager


def _check(instance: PathInstance, i: int, j: int) -> None:
    instance.check_index(i, "i")
    instance.check_index(j, "j")
    if not i < j:
        raise ProfileError(f"Ожидалось i < j, получено i={i}, j={j}")


def _envelope(instance: PathInstance, side: str, varying: int, k: int, base: Scenario,
              domain: Sequence, manager: Optional["ProfileManager"]) -> PwlFunction:
    if manager is not None:
        return manager.envelope(side, varying, k, base, domain)
    build = left_envelope if side == LEFT else right_envelope
    return build(instance, instance.positions[k], varying, base, domain)


def m_k(instance: PathInstance, i: int, j: int, k: int, box: Box,
        base: Optional[Scenario] = None, manager: Optional["ProfileManager"] = None) -> Profile:
    """
    M_k(alpha) = min по B(alpha) от Theta(P, x_k : s(alpha1, alpha2)), где в базовом
    сценарии вес вершины i заменён на alpha1, вершины j - на alpha2

    Theta_L(x_k) зависит только от alpha1, Theta_R(x_k) - только от alpha2, поэтому
    профиль строится из LUE_{i,k} и RUE_{j,k}.
    """
    _check(instance, i, j)
    if not i <= k <= j:
        raise ProfileError(f"Ожидалось i <= k <= j, получено i={i}, k={k}, j={j}")
    if base is None:
        base = two_varying(instance, i, j, 0, 0)
    left = _envelope(instance, LEFT, i, k, base, (box.a1, box.a2), manager)
    right = _envelope(instance, RIGHT, j, k, base, (box.b1, box.b2), manager)
    return min_max_profile(left, right, box, strict=False).located(instance.positions[k])


def m_edge(instance: PathInstance, i: int, j: int, k: int, box: Box,
           base: Optional[Scenario] = None, manager: Optional["ProfileManager"] = None) -> Profile:
    """
    M^{(k)}_{i,j}(alpha) = min по B(alpha) и y из [x_k, x_{k+1}] от Theta(P, y : s(alpha1, alpha2))

    Минимум M_k, M_{k+1} и max(D, 0), где D - профиль со сдвигом y для
    fL = LUE_{i,k+1} - x_{k+1} и fR = RUE_{j,k} + x_k. В концах ребра D не меньше
    M_k и M_{k+1} (сдвинутые огибающие учитывают вершину конца), поэтому свидетели
    D при y = x_k и y = x_{k+1} не строятся.
    """
    _check(instance, i, j)
    if not i <= k < j:
        raise ProfileError(f"Ожидалось i <= k < j, получено i={i}, k={k}, j={j}")
    if base is None:
        base = two_varying(instance, i, j, 0, 0)
    x_k, x_next = instance.positions[k], instance.positions[k + 1]

    if manager is not None:
        at_left = manager.vertex(i, j, k, box, base)
        at_right = manager.vertex(i, j, k + 1, box, base)
    else:
        at_left = m_k(instance, i, j, k, box, base)
        at_right = m_k(instance, i, j, k + 1, box, base)
    f_left = add_constant(_envelope(instance, LEFT, i, k + 1, base, (box.a1, box.a2), manager), -x_next)
    f_right = add_constant(_envelope(instance, RIGHT, j, k, base, (box.b1, box.b2), manager), x_k)
    inside = min_max_y_profile(
        f_left, f_right, box, (x_k, x_next), strict=False, endpoints=False
    ).floored(0).renamed("y:")
    return Profile.combine((at_left.renamed("x_k:"), at_right.renamed("x_k+1:"), inside))


def m_edge_single(instance: PathInstance, j: int, k: int, base: Scenario, alpha_range: Sequence,
                  manager: Optional["ProfileManager"] = None) -> Profile:
    """
    M^{(k)}_j(alpha) = min по y из [x_k, x_{k+1}] от Theta(P, y : s_{-j}(alpha))

    Сводится к m_edge с вырожденным прямоугольником: вспомогательная вершина
    (k при k < j, иначе k + 1) закреплена на своём весе из base.
    """
    instance.check_index(j, "j")
    instance.check_scenario(base)
    if not 0 <= k < instance.n:
        raise ProfileError(f"Ребро {k} вне диапазона [0, {instance.n - 1}]")
    lo, hi = as_fraction(alpha_range[0]), as_fraction(alpha_range[1])
    if k < j:
        pinned = base.weights[k]
        i, other, box = k, j, Box(pinned, pinned, lo, hi)
    else:
        pinned = base.weights[k + 1]
        i, other, box = j, k + 1, Box(lo, hi, pinned, pinned)
    if manager is not None:
        profile = manager.edge(i, other, k, box, base)
    else:
        profile = m_edge(instance, i, other, k, box, base)
    return profile.shifted(-pinned)
