"""
Профили минимальной эвакуации как минимум функций-свидетелей

M(alpha) = min по (alpha1, alpha2) из B(alpha) от max(fL(alpha1), fR(alpha2)) и его вариант
с дополнительным сдвигом y из [l, r]: max(fL(alpha1) + y, fR(alpha2) - y).
"""
from bisect import bisect_left, bisect_right
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..pwl import (
    PartialPwl,
    PwlFunction,
    add,
    add_constant,
    inverse,
    merge_max,
    restrict,
    scale,
    shift_arg
)
from ..utils.errors import ProfileError
from ..utils.rational import as_fraction
from ..utils.run_stats import RunStats
from .models import Box, Profile, Split, Witness

HALF = Fraction(1, 2)


def _prepare(f: PwlFunction, lo: Fraction, hi: Fraction, name: str, strict: bool) -> PwlFunction:
    if not (f.contains(lo) and f.contains(hi)):
        raise ProfileError(f"{name}: область [{f.lo}, {f.hi}] не содержит [{lo}, {hi}]")
    f = restrict(f, lo, hi)
    extension = f.extension()
    if not extension.is_good:
        raise ProfileError(f"{name}: функция должна быть неубывающей")
    if strict and not extension.is_positive:
        raise ProfileError(f"{name}: функция должна быть положительной (все наклоны > 0)")
    return f


def _level_range(f: PwlFunction, t: Fraction) -> Tuple[Fraction, Fraction]:
    """[p, u] = {alpha : f(alpha) = t} для неубывающей f и t из [f(a), f(b)]"""
    xs, ys = f.xs, f.ys
    k = bisect_left(ys, t)
    if k < len(ys) and ys[k] == t:
        p = xs[k]
    else:
        p = xs[k - 1] + (t - ys[k - 1]) * (xs[k] - xs[k - 1]) / (ys[k] - ys[k - 1])
    k = bisect_right(ys, t)
    if ys[k - 1] == t:
        u = xs[k - 1]
    else:
        u = xs[k - 1] + (t - ys[k - 1]) * (xs[k] - xs[k - 1]) / (ys[k] - ys[k - 1])
    return p, u


def _balanced(fl: PwlFunction, fr: PwlFunction) -> Optional[PwlFunction]:
    """
    Свидетель равновесия fL(alpha1) = fR(alpha2) = t на общем диапазоне уровней.
    Для положительных функций - обращение суммы обратных, иначе проход по уровням.
    """
    el, er = fl.extension(), fr.extension()
    t_lo = max(el.ys[0], er.ys[0])
    t_hi = min(el.ys[-1], er.ys[-1])
    if t_lo > t_hi:
        return None
    if el.is_positive and er.is_positive:
        total = add(restrict(inverse(el), t_lo, t_hi), restrict(inverse(er), t_lo, t_hi))
        return inverse(total)

    levels = {t_lo, t_hi}
    levels.update(y for y in el.ys if t_lo < y < t_hi)
    levels.update(y for y in er.ys if t_lo < y < t_hi)
    xs: List[Fraction] = []
    ys: List[Fraction] = []
    for t in sorted(levels):
        pl, ul = _level_range(el, t)
        pr, ur = _level_range(er, t)
        xs.extend((pl + pr, ul + ur))
        ys.extend((t, t))
    return PwlFunction.from_points(xs, ys)


def min_max_profile(f_left: PwlFunction, f_right: PwlFunction, box: Box, strict: bool = True) -> Profile:
    """
    M(alpha) = min по (alpha1, alpha2) из B(alpha) от max(fL(alpha1), fR(alpha2))

    Минимум пяти свидетелей: alpha1 = a1, alpha1 = a2, alpha2 = b1, alpha2 = b2
    и равновесие fL(alpha1) = fR(alpha2).

    Args:
        f_left: неубывающая функция, определённая на [a1, a2]
        f_right: неубывающая функция, определённая на [b1, b2]
        box: прямоугольник B
        strict: требовать положительности (все наклоны > 0)
    Returns:
        Profile: значения на [a1 + b1, a2 + b2] и правило разбиения
    """
    fl = _prepare(f_left, box.a1, box.a2, "fL", strict)
    fr = _prepare(f_right, box.b1, box.b2, "fR", strict)
    a1, a2, b1, b2 = box.a1, box.a2, box.b1, box.b2

    witnesses = [
        Witness.of(
            "a1", merge_max(PwlFunction.constant(fl(a1), a1 + b1, a1 + b2), shift_arg(fr, a1)),
            lambda alpha: Split(a1, alpha - a1)
        ),
        Witness.of(
            "a2", merge_max(PwlFunction.constant(fl(a2), a2 + b1, a2 + b2), shift_arg(fr, a2)),
            lambda alpha: Split(a2, alpha - a2)
        ),
        Witness.of(
            "b1", merge_max(shift_arg(fl, b1), PwlFunction.constant(fr(b1), a1 + b1, a2 + b1)),
            lambda alpha: Split(alpha - b1, b1)
        ),
        Witness.of(
            "b2", merge_max(shift_arg(fl, b2), PwlFunction.constant(fr(b2), a1 + b2, a2 + b2)),
            lambda alpha: Split(alpha - b2, b2)
        ),
    ]

    balanced = _balanced(fl, fr)
    if balanced is not None:
        el, er = fl.extension(), fr.extension()

        def balanced_split(alpha: Fraction) -> Split:
            t = balanced(alpha)
            pl, ul = _level_range(el, t)
            pr, ur = _level_range(er, t)
            alpha1 = min(ul, max(pl, alpha - ur))
            return Split(alpha1, alpha - alpha1)

        witnesses.append(Witness.of("balanced", balanced, balanced_split))
    return Profile.from_witnesses(witnesses)


# --- Профиль со сдвигом y ---
def _pinned(a: PwlFunction, b: PwlFunction, ell: Fraction, r: Fraction) -> PwlFunction:
    """min по y из [l, r] от max(A + y, B - y) = max(A + l, B - r, (A + B) / 2)"""
    return merge_max(merge_max(add_constant(a, ell), add_constant(b, -r)), scale(add(a, b), HALF))


def _clamp(value: Fraction, lo: Fraction, hi: Fraction) -> Fraction:
    return min(hi, max(lo, value))


def _pinned_witness(name: str, a: PwlFunction, b: PwlFunction, ell: Fraction, r: Fraction,
                    alpha1_of, alpha2_of) -> Optional[Witness]:
    def split(alpha: Fraction) -> Split:
        return Split(alpha1_of(alpha), alpha2_of(alpha), _clamp((b(alpha) - a(alpha)) / 2, ell, r))
    return Witness.of(name, _pinned(a, b, ell, r), split)


def _convolution_witness(fl: PwlFunction, fr: PwlFunction, ell: Fraction, r: Fraction) -> Optional[Witness]:
    """
    Свидетель внутреннего y: (fL(alpha1) + fR(alpha2)) / 2 вдоль пути оптимальных разбиений
    выпуклых fL, fR. Оставляются только участки, где y = (fR - fL) / 2 лежит в [l, r].

    При внутреннем y оптимум равен (fL(alpha1) + fR(alpha2)) / 2, и лучшая добавка веса
    всегда идёт в кусок с меньшим наклоном. Поэтому путь - слияние кусков fL и fR
    по возрастанию наклона (при равенстве сначала fL). Это то же, что сопоставление
    каждого излома fL с набором кусков fR, наклоны которых лежат между наклонами
    соседних кусков fL: такой набор и есть прогон кусков fR между двумя кусками fL
    в слиянии, а склейка функций по соседним изломам - переход к следующему прогону.
    Каждый шаг обрабатывает один кусок, всего шагов sL + sR (счётчик "interior_steps").
    """
    el, er = fl.extension(), fr.extension()
    pieces = [(slope, 0, k) for k, slope in enumerate(el.slopes)]
    pieces.extend((slope, 1, k) for k, slope in enumerate(er.slopes))
    pieces.sort()
    RunStats.add("interior_steps", len(pieces))

    alpha1, alpha2 = el.lo, er.lo
    value_l, value_r = el.ys[0], er.ys[0]
    segments: List[PwlFunction] = []
    path: List[Tuple[Fraction, Fraction, Fraction, Fraction, int]] = []
    for slope, side, k in pieces:
        length = (el.xs[k + 1] - el.xs[k]) if side == 0 else (er.xs[k + 1] - er.xs[k])
        start = alpha1 + alpha2
        y0, c0 = (value_r - value_l) / 2, (value_l + value_r) / 2
        path.append((start, start + length, alpha1, alpha2, side))
        if side == 0:
            alpha1 += length
            value_l += slope * length
        else:
            alpha2 += length
            value_r += slope * length
        end = alpha1 + alpha2
        y1, c1 = (value_r - value_l) / 2, (value_l + value_r) / 2

        kept = _inside(start, end, y0, y1, ell, r)
        if kept is None:
            continue
        lo, hi = kept
        value_at = lambda a: c0 + (c1 - c0) * (a - start) / (end - start)
        if lo == hi:
            segments.append(PwlFunction((lo,), (value_at(lo),)))
        else:
            segments.append(PwlFunction.from_points((lo, hi), (value_at(lo), value_at(hi))))
    if not segments:
        return None

    def split(alpha: Fraction) -> Split:
        for lo, hi, start1, start2, side in path:
            if lo <= alpha <= hi:
                a1, a2 = (start1 + alpha - lo, start2) if side == 0 else (start1, start2 + alpha - lo)
                return Split(a1, a2, _clamp((er(a2) - el(a1)) / 2, ell, r))
        raise ProfileError(f"alpha = {alpha} вне пути разбиений")

    return Witness.of("interior", PartialPwl(tuple(segments)), split)


def _inside(start: Fraction, end: Fraction, y0: Fraction, y1: Fraction,
            ell: Fraction, r: Fraction) -> Optional[Tuple[Fraction, Fraction]]:
    """Часть отрезка [start, end], на которой линейная y лежит в [l, r]"""
    if y0 == y1:
        return (start, end) if ell <= y0 <= r else None
    at = lambda level: start + (end - start) * (level - y0) / (y1 - y0)
    p, q = sorted((at(ell), at(r)))
    lo, hi = max(start, p), min(end, q)
    if lo > hi:
        return None
    return lo, hi


def min_max_y_profile(f_left: PwlFunction, f_right: PwlFunction, box: Box, y_range: Sequence,
                      strict: bool = True, endpoints: bool = True) -> Profile:
    """
    M(alpha) = min по (alpha1, alpha2) из B(alpha) и y из [l, r] от max(fL(alpha1) + y, fR(alpha2) - y)

    Свидетели: y = l и y = r (через min_max_profile), четыре закреплённые стороны
    прямоугольника со сбалансированным y, и внутренний путь оптимальных разбиений.
    endpoints = False пропускает свидетелей y = l и y = r, когда вызывающий
    берёт минимум с точными значениями в концах отрезка сам.

    Raises:
        ProfileError: если l > r или функции не выпуклые
    """
    ell, r = as_fraction(y_range[0]), as_fraction(y_range[1])
    if ell > r:
        raise ProfileError(f"Пустой диапазон y [{ell}, {r}]")
    fl = _prepare(f_left, box.a1, box.a2, "fL", strict)
    fr = _prepare(f_right, box.b1, box.b2, "fR", strict)
    if not (fl.extension().is_convex and fr.extension().is_convex):
        raise ProfileError("Профиль со сдвигом y требует выпуклых функций (возрастающих наклонов)")
    a1, a2, b1, b2 = box.a1, box.a2, box.b1, box.b2

    witnesses: List[Witness] = []
    if endpoints:
        at_ell = min_max_profile(add_constant(fl, ell), add_constant(fr, -ell), box, strict=False)
        at_r = min_max_profile(add_constant(fl, r), add_constant(fr, -r), box, strict=False)
        witnesses.extend(at_ell.located(ell).renamed("l:").witnesses)
        witnesses.extend(at_r.located(r).renamed("r:").witnesses)

    witnesses.append(_pinned_witness(
        "a1", PwlFunction.constant(fl(a1), a1 + b1, a1 + b2), shift_arg(fr, a1), ell, r,
        lambda alpha: a1, lambda alpha: alpha - a1
    ))
    witnesses.append(_pinned_witness(
        "a2", PwlFunction.constant(fl(a2), a2 + b1, a2 + b2), shift_arg(fr, a2), ell, r,
        lambda alpha: a2, lambda alpha: alpha - a2
    ))
    witnesses.append(_pinned_witness(
        "b1", shift_arg(fl, b1), PwlFunction.constant(fr(b1), a1 + b1, a2 + b1), ell, r,
        lambda alpha: alpha - b1, lambda alpha: b1
    ))
    witnesses.append(_pinned_witness(
        "b2", shift_arg(fl, b2), PwlFunction.constant(fr(b2), a1 + b2, a2 + b2), ell, r,
        lambda alpha: alpha - b2, lambda alpha: b2
    ))
    witnesses.append(_convolution_witness(fl, fr, ell, r))
    return Profile.from_witnesses(witnesses)
