import time
from fractions import Fraction

import numpy as np
import pytest

from Evakuatsu.core import PathInstance, regret
from Evakuatsu.oracle import GridConfig, grid_rmax, is_unimodal, random_instance, random_scenario, sweep_ropt
from Evakuatsu.regret import (
    G_J,
    H_I,
    RegretSolver,
    eval_barG_ij,
    eval_G_ij,
    eval_G_j,
    eval_H_i,
    r_max,
    r_opt,
    term_G_ij,
    term_G_j,
)
from Evakuatsu.utils import InstanceError


# --- t1 ---
@pytest.mark.parametrize("x, expected", [(0, 4), (1, 3), (2, 4)])
def test_r_max_at_vertices(t1, x, expected):
    assert r_max(t1, x).value == expected


def test_r_max_witness_right_end(t1):
    report = r_max(t1, 2)
    assert report.location.vertex_index == 2
    assert report.witness.family == G_J
    assert report.witness.i == 0
    assert report.witness.scenario.weights == (2, 0, 0)
    assert report.witness.attained


def test_r_max_witness_left_end(t1):
    report = r_max(t1, 0)
    assert report.witness.family == H_I
    assert report.witness.i == 2
    assert report.witness.scenario.weights == (0, 0, 2)


def test_r_max_witness_middle(t1):
    report = r_max(t1, 1)
    assert report.witness.scenario.weights == (2, 0, 0)


def test_r_opt_t1(t1):
    report = r_opt(t1)
    assert report.value == 3
    assert report.location.value == 1
    assert report.location.vertex_index == 1


def test_r_opt_mirror(t1_mirror):
    report = r_opt(t1_mirror)
    assert report.value == 3
    assert report.location.value == 1


def test_r_max_values_mirror(t1_mirror):
    solver = RegretSolver(t1_mirror)
    assert [solver.r_max(x).value for x in (0, 1, 2)] == [4, 3, 4]


def test_single_terms(t1):
    assert eval_G_j(t1, 0, 2) == 4
    assert eval_H_i(t1, 2, 0) == 4
    assert eval_H_i(t1, 1, 0) == 3
    assert eval_G_j(t1, 1, 2) == 2
    assert eval_G_ij(t1, 0, 1, 2) == 2
    assert eval_barG_ij(t1, 0, 1, 2) == 2


def test_terms_reject_bad_indices(t1):
    with pytest.raises(InstanceError):
        term_G_j(t1, 2, 2)
    with pytest.raises(InstanceError):
        term_G_ij(t1, 1, 1, 2)


def test_witness_replays_exactly_on_t1(t1):
    for x in (0, 1, 2):
        report = r_max(t1, x)
        assert regret(t1, x, report.witness.scenario) == report.value


def test_r_max_inside_edge(t1):
    value = r_max(t1, Fraction(1, 2)).value
    assert value >= grid_rmax(t1, Fraction(1, 2), GridConfig(Fraction(1, 4)))
    assert value >= 3


def test_single_vertex_path():
    instance = PathInstance((0,), (), (1,), (2,))
    report = r_opt(instance)
    assert report.value == 0
    assert report.location.value == 0
    assert report.witness is None


def test_report_to_dict(t1):
    data = r_opt(t1).to_dict()
    assert data["value"] == "3"
    assert data["location"] == "1"
    assert data["vertex_index"] == 1
    assert data["decimal"]["value"] == 3.0
    assert data["witness"]["scenario"] == ["2", "0", "0"]


# --- свойства ---
def test_r_max_is_upper_bound_of_regret(t1, rng):
    instances = [t1] + [random_instance(rng, 2) for _ in range(2)]
    for instance in instances:
        solver = RegretSolver(instance)
        end = instance.positions[-1]
        for x in (0, end / 3, end / 2, end):
            value = solver.r_max(x).value
            for _ in range(10):
                assert value >= regret(instance, x, random_scenario(rng, instance))


def test_witness_is_at_least_as_bad(rng):
    for _ in range(2):
        instance = random_instance(rng, 2)
        solver = RegretSolver(instance)
        for x in instance.positions:
            report = solver.r_max(x)
            if report.witness is not None and report.witness.attained:
                assert regret(instance, x, report.witness.scenario) >= report.value


def test_grid_is_below_r_max(t1):
    cfg = GridConfig(Fraction(1, 4))
    solver = RegretSolver(t1)
    for x in (0, Fraction(1, 2), 1, Fraction(3, 2), 2):
        assert grid_rmax(t1, x, cfg) <= solver.r_max(x).value


@pytest.mark.parametrize("instance_name", ["t1", "t1_mirror"])
def test_side_terms_decrease_by_distance(instance_name, request):
    instance = request.getfixturevalue(instance_name)
    solver = RegretSolver(instance)
    positions = instance.positions
    for u in range(1, instance.n):
        d = positions[u + 1] - positions[u]
        assert solver.G(positions[u]).value <= solver.G(positions[u + 1]).value - d
    for u in range(instance.n - 1):
        d = positions[u + 1] - positions[u]
        assert solver.H(positions[u + 1]).value <= solver.H(positions[u]).value - d


def test_side_terms_missing_at_ends(t1):
    solver = RegretSolver(t1)
    assert solver.G(0) is None
    assert solver.H(2) is None


def test_cache_does_not_change_results(t1):
    cached = RegretSolver(t1)
    plain = RegretSolver(t1, cache=False)
    for x in (0, Fraction(1, 3), 1, 2):
        assert cached.r_max(x) == plain.r_max(x)
    assert cached.r_opt() == plain.r_opt()


def test_r_max_is_unimodal_on_samples(t1, rng):
    instances = [t1] + [random_instance(rng, 2) for _ in range(3)]
    for instance in instances:
        solver = RegretSolver(instance)
        start, end = instance.positions[0], instance.positions[-1]
        points = set(instance.positions)
        points.update(start + (end - start) * Fraction(k, 12) for k in range(13))
        assert is_unimodal([solver.r_max(x).value for x in sorted(points)])


def test_r_opt_is_minimum_over_samples(rng):
    instance = random_instance(rng, 2)
    solver = RegretSolver(instance)
    report = solver.r_opt()
    end = instance.positions[-1]
    for k in range(9):
        assert report.value <= solver.r_max(end * Fraction(k, 8)).value


# --- приёмочные прогоны ---
@pytest.mark.slow
def test_r_max_agrees_with_grid(rng):
    h = Fraction(1, 64)
    for _ in range(30):
        instance = random_instance(rng, int(rng.integers(1, 4)), hi=Fraction(1, 2))
        solver = RegretSolver(instance)
        bound = 2 * h / instance.min_capacity_overall
        start, end = instance.positions[0], instance.positions[-1]
        middle = instance.positions[instance.vertex_count // 2]
        sinks = (start, start + (end - start) * Fraction(2, 7), middle, start + (end - start) * Fraction(5, 7), end)
        for x in sinks:
            value = solver.r_max(x).value
            on_grid = grid_rmax(instance, x, GridConfig(h))
            assert on_grid <= value
            assert value - on_grid <= bound


@pytest.mark.slow
def test_r_opt_agrees_with_sweep(t1):
    location, value = sweep_ropt(t1, GridConfig(Fraction(1, 2)), 4)
    report = r_opt(t1)
    assert (location.value, value) == (report.location.value, report.value)


@pytest.mark.slow
def test_r_opt_on_forty_edges_finishes_in_time():
    instance = random_instance(np.random.default_rng(40), 40)
    started = time.perf_counter()
    report = RegretSolver(instance).r_opt()
    assert time.perf_counter() - started < 300
    assert report.value > 0
    assert instance.positions[0] <= report.location.value <= instance.positions[-1]
