import math
from fractions import Fraction

import pytest

from Evakuatsu.oracle import random_positive_pwl
from Evakuatsu.pwl import (
    Difference,
    Line,
    PartialPwl,
    PwlFunction,
    add,
    add_constant,
    add_line,
    evaluate,
    inverse,
    max_difference,
    merge_max,
    merge_min,
    restrict,
    scale,
    shift_arg,
    upper_envelope,
)
from Evakuatsu.utils import PwlError


def grid(lo, hi, steps=32):
    lo, hi = Fraction(lo), Fraction(hi)
    return [lo + (hi - lo) * Fraction(k, steps) for k in range(steps + 1)]


# --- PwlFunction ---
def test_from_points_drops_collinear_breaks():
    f = PwlFunction.from_points((0, 1, 2, 3), (0, 1, 2, 4))
    assert f.xs == (0, 2, 3)
    assert f.ys == (0, 2, 4)
    assert f.size == 2


def test_rejects_unordered_breaks():
    with pytest.raises(PwlError):
        PwlFunction((Fraction(1), Fraction(0)), (Fraction(0), Fraction(0)))


def test_left_value_is_exact_value_at_start():
    f = PwlFunction.from_points((0, 1), (1, 2), left_value=0)
    assert f(0) == 0
    assert f.limit_at(0) == 1
    assert f(Fraction(1, 2)) == Fraction(3, 2)
    assert f.extension().left_value is None
    assert evaluate(f, "1/2") == Fraction(3, 2)


def test_left_value_equal_to_start_is_dropped():
    assert PwlFunction.from_points((0, 1), (1, 2), left_value=1).left_value is None


def test_evaluate_outside_domain():
    with pytest.raises(PwlError):
        PwlFunction.constant(1, 0, 1)(2)


# --- upper_envelope ---
def test_upper_envelope_two_lines():
    f = upper_envelope([Line(Fraction(0), Fraction(1)), Line(Fraction(1), Fraction(0))], (0, 2))
    assert f.xs == (0, 1, 2)
    assert f.ys == (1, 1, 2)


def test_upper_envelope_keeps_highest_of_parallel_lines():
    f = upper_envelope([Line(Fraction(1), Fraction(0)), Line(Fraction(1), Fraction(2))], (0, 1))
    assert f.ys == (2, 3)


def test_from_lines_accepts_any_order():
    f = PwlFunction.from_lines([Line(Fraction(2), Fraction(0)), Line(Fraction(0), Fraction(1))], 0, 2)
    assert f.xs == (0, Fraction(1, 2), 2)
    assert f.ys == (1, 1, 4)


def test_upper_envelope_rejects_decreasing_slopes():
    with pytest.raises(PwlError):
        upper_envelope([Line(Fraction(2), Fraction(0)), Line(Fraction(1), Fraction(0))], (0, 1))


def test_upper_envelope_on_point():
    f = upper_envelope([Line(Fraction(1), Fraction(0)), Line(Fraction(2), Fraction(-1))], (3, 3))
    assert f.is_point
    assert f(3) == 5


def test_upper_envelope_matches_naive(rng):
    for _ in range(30):
        count = int(rng.integers(1, 8))
        lines = sorted(
            (Line(Fraction(int(rng.integers(0, 9)), 4), Fraction(int(rng.integers(-8, 9)), 4)) for _ in range(count)),
            key=lambda line: line.slope,
        )
        f = upper_envelope(lines, (0, 4))
        assert f.is_convex
        assert f.size <= len({line.slope for line in lines})
        for x in grid(0, 4):
            assert f(x) == max(line(x) for line in lines)


# --- inverse ---
def test_inverse_of_line():
    f = inverse(PwlFunction.from_line(Line(Fraction(2), Fraction(1)), 0, 3))
    assert f.xs == (1, 7)
    assert f.ys == (0, 3)


def test_inverse_requires_positive_slopes():
    with pytest.raises(PwlError):
        inverse(PwlFunction.from_points((0, 1, 2), (0, 1, 1)))


def test_inverse_undoes_function(rng):
    for _ in range(10):
        f = random_positive_pwl(rng, 0, 2, 5)
        g = inverse(f)
        for x in grid(0, 2, 8):
            assert g(f(x)) == x


# --- унарные операции ---
def test_scale_shift_and_lines():
    f = PwlFunction.from_points((0, 1, 2), (0, 1, 3), left_value=-1)
    assert scale(f, 2).ys == (0, 2, 6)
    assert scale(f, 2)(0) == -2
    assert shift_arg(f, 1).xs == (1, 2, 3)
    assert shift_arg(f, 1)(1) == -1
    g = add_line(f, Line(Fraction(1), Fraction(1)))
    assert g(1) == 3
    assert g(0) == 0
    assert add_constant(f, 5)(2) == 8


def test_scale_rejects_non_positive():
    with pytest.raises(PwlError):
        scale(PwlFunction.constant(1, 0, 1), 0)


def test_restrict():
    f = PwlFunction.from_points((0, 1, 2), (0, 1, 3))
    g = restrict(f, Fraction(1, 2), Fraction(3, 2))
    assert g.xs == (Fraction(1, 2), 1, Fraction(3, 2))
    assert g.ys == (Fraction(1, 2), 1, 2)
    with pytest.raises(PwlError):
        restrict(f, -1, 1)


# --- add / merge_max ---
def test_add_on_overlap():
    f = PwlFunction.from_points((0, 2), (0, 2))
    g = PwlFunction.from_points((1, 2, 3), (0, 2, 2))
    h = add(f, g)
    assert h.domain == (1, 2)
    assert h(1) == 1
    assert h(2) == 4


def test_add_matches_naive(rng):
    for _ in range(20):
        f = random_positive_pwl(rng, 0, 2, 4)
        g = random_positive_pwl(rng, 0, 2, 4)
        h = add(f, g)
        for x in grid(0, 2):
            assert h(x) == f(x) + g(x)


def test_merge_max_crossing_lines():
    f = merge_max(PwlFunction.from_points((0, 2), (0, 2)), PwlFunction.from_points((0, 2), (2, 0)))
    assert f.xs == (0, 1, 2)
    assert f.ys == (2, 1, 2)


def test_merge_max_keeps_exact_start():
    f = PwlFunction.from_points((0, 1), (1, 2), left_value=0)
    g = PwlFunction.constant(Fraction(1, 2), 0, 1)
    h = merge_max(f, g)
    assert h(0) == Fraction(1, 2)
    assert h.limit_at(0) == 1


def test_merge_max_matches_naive(rng):
    for _ in range(20):
        f = random_positive_pwl(rng, 0, 2, 4)
        g = random_positive_pwl(rng, 0, 2, 4)
        h = merge_max(f, g)
        for x in grid(0, 2):
            assert h(x) == max(f(x), g(x))


# --- merge_min ---
def test_merge_min_crossing_lines():
    result = merge_min([PwlFunction.from_points((0, 2), (0, 2)), PwlFunction.from_points((0, 2), (2, 0))])
    f = result.to_function()
    assert f.xs == (0, 1, 2)
    assert f.ys == (0, 1, 0)


def test_merge_min_disjoint_domains():
    result = merge_min([PwlFunction.constant(1, 0, 1), PwlFunction.constant(0, 2, 3)])
    assert result.intervals == [(0, 1), (2, 3)]
    assert result(Fraction(3, 2)) == math.inf
    with pytest.raises(PwlError):
        result.to_function()


def test_merge_min_keeps_isolated_point():
    result = merge_min([PwlFunction.constant(2, 0, 2), PwlFunction((Fraction(1),), (Fraction(1),))])
    assert result(1) == 1
    assert result(Fraction(1, 2)) == 2


def test_merge_min_of_nothing_is_empty():
    assert merge_min([None]).is_empty


def test_merge_min_matches_naive(rng):
    for _ in range(30):
        functions = []
        for _ in range(int(rng.integers(1, 5))):
            lo = Fraction(int(rng.integers(0, 8)), 4)
            hi = lo + Fraction(int(rng.integers(1, 8)), 4)
            functions.append(random_positive_pwl(rng, lo, hi, 4))
        result = merge_min(functions)
        for x in grid(0, 4, 64):
            values = [f(x) for f in functions if f.contains(x)]
            assert result(x) == (min(values) if values else math.inf)


# --- max_difference ---
def test_max_difference_at_right_end():
    d = max_difference(PwlFunction.from_points((0, 2), (0, 2)), PwlFunction.constant(Fraction(1, 2), 0, 2))
    assert d == Difference(Fraction(3, 2), Fraction(2), True)


def test_max_difference_prefers_leftmost():
    d = max_difference(PwlFunction.constant(1, 0, 2), PwlFunction.constant(0, 0, 2))
    assert d.argument == 0
    assert d.value == 1


def test_max_difference_reports_limit_at_jump():
    f = PwlFunction.from_points((0, 1), (1, 0), left_value=0)
    d = max_difference(f, PwlFunction.constant(0, 0, 1))
    assert d.value == 1
    assert d.argument == 0
    assert not d.attained


def test_max_difference_over_partial_function():
    g = PartialPwl((PwlFunction.constant(1, 0, 1), PwlFunction.constant(0, 2, 3)))
    d = max_difference(PwlFunction.from_points((0, 3), (0, 3)), g)
    assert d.value == 3
    assert d.argument == 3


def test_max_difference_matches_naive(rng):
    for _ in range(20):
        f = random_positive_pwl(rng, 0, 2, 5)
        g = random_positive_pwl(rng, 0, 2, 5)
        d = max_difference(f, g)
        samples = grid(0, 2, 16) + list(f.xs) + list(g.xs)
        assert d.value == max(f(x) - g(x) for x in samples)
        assert f(d.argument) - g(d.argument) == d.value
