import math
from fractions import Fraction

import pytest

from Evakuatsu.core import (
    PathInstance,
    Scenario,
    min_capacity,
    min_capacity_scan,
    prefix_weight,
    shift,
    substitute,
    two_varying,
    validate,
)
from Evakuatsu.oracle import random_instance, random_scenario
from Evakuatsu.utils import InstanceError, ScenarioError

from .conftest import scenario


# --- validate ---
def test_validate_accepts_t1(t1):
    assert validate(t1) == []


@pytest.mark.parametrize(
    "positions, capacities, lo, hi, code",
    [
        ((1, 2), (1,), (0, 0), (1, 1), "position_origin"),
        ((0, 1, 1), (1, 1), (0, 0, 0), (1, 1, 1), "positions_not_increasing"),
        ((0, 1), (1, 1), (0, 0), (1, 1), "capacity_count"),
        ((0, 1, 2), (1, 0), (0, 0, 0), (2, 2, 2), "capacity_not_positive"),
        ((0, 1), (1,), (0,), (1, 1), "weight_count"),
        ((0, 1), (1,), (-1, 0), (1, 1), "weight_negative"),
        ((0, 1), (1,), (2, 0), (1, 1), "weight_interval"),
    ],
)
def test_validate_reports_issue(positions, capacities, lo, hi, code):
    issues = validate(PathInstance(positions, capacities, lo, hi))
    assert code in {issue.code for issue in issues}


def test_from_lengths_builds_positions():
    instance = PathInstance.from_lengths(("1/2", 2), (1, 3), (0, 0, 0), (1, 1, 1))
    assert instance.positions == (0, Fraction(1, 2), Fraction(5, 2))
    assert instance.n == 2


def test_point_marks_vertices(t1):
    assert t1.point(1).vertex_index == 1
    assert t1.point(Fraction(1, 2)).vertex_index is None
    with pytest.raises(InstanceError):
        t1.point(3)


# --- prefix_weight ---
def test_prefix_weight(t1):
    s = scenario(1, 2, 3)
    assert prefix_weight(s, 0, 2) == 6
    assert prefix_weight(s, 1, 1) == 2
    with pytest.raises(InstanceError):
        prefix_weight(s, 2, 1)


# --- min_capacity ---
@pytest.mark.parametrize(
    "x, x2, expected",
    [
        (Fraction(1, 2), Fraction(3, 2), 1),
        (1, 2, 2),
        (0, 2, 1),
        (Fraction(1, 2), 1, 1),
    ],
)
def test_min_capacity(t1, x, x2, expected):
    assert min_capacity(t1, x, x2) == expected


def test_min_capacity_empty_range(t1):
    assert min_capacity(t1, 1, 1) == math.inf


def test_min_capacity_rejects_reversed(t1):
    with pytest.raises(InstanceError):
        min_capacity(t1, 2, 1)


def test_min_capacity_matches_scan(rng):
    for _ in range(20):
        instance = random_instance(rng, int(rng.integers(1, 8)))
        points = sorted(
            Fraction(int(v), 8) for v in rng.integers(0, int(instance.positions[-1] * 8) + 1, size=2)
        )
        assert min_capacity(instance, *points) == min_capacity_scan(instance, *points)


# --- two_varying ---
@pytest.mark.parametrize(
    "i, j, alpha, beta, expected",
    [
        (0, 2, 1, 1, (1, 2, 1)),
        (0, 0, 2, 2, (2, 0, 0)),
        (1, 2, 0, 2, (0, 0, 2)),
    ],
)
def test_two_varying(t1, i, j, alpha, beta, expected):
    assert two_varying(t1, i, j, alpha, beta).weights == expected


def test_two_varying_rejects_unequal_same_vertex(t1):
    with pytest.raises(ScenarioError):
        two_varying(t1, 1, 1, 0, 1)


def test_two_varying_rejects_reversed_indices(t1):
    with pytest.raises(ScenarioError):
        two_varying(t1, 2, 0, 0, 0)


# --- substitute ---
def test_substitute_replaces_one_weight():
    s = scenario(1, 0, 1)
    assert substitute(s, 1, 2).weights == (1, 2, 1)
    assert substitute(s, 0, 1) is s


# --- shift ---
def test_shift_moves_weight(t1):
    moved = shift(t1, scenario(2, 0, 0), 0, 1, 1)
    assert moved.weights == (1, 1, 0)
    assert moved.total == 2


def test_shift_rejects_below_lower_bound(t1):
    with pytest.raises(ScenarioError):
        shift(t1, scenario(0, 0, 0), 0, 1, 1)


def test_shift_rejects_above_upper_bound(t1):
    with pytest.raises(ScenarioError):
        shift(t1, scenario(2, 0, 2), 0, 2, 1)


def test_shift_keeps_legality(rng):
    for _ in range(30):
        instance = random_instance(rng, 3)
        s = random_scenario(rng, instance)
        i, j = 0, instance.n
        room = min(s[i] - instance.weight_lo[i], instance.weight_hi[j] - s[j])
        moved = shift(instance, s, i, j, room)
        assert moved.is_legal(instance)
        assert moved.total == s.total


def test_negative_weight_is_rejected():
    with pytest.raises(ScenarioError):
        Scenario((Fraction(-1),))
