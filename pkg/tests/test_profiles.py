from fractions import Fraction

import pytest

from Evakuatsu.core import theta, theta_min_on_edge, two_varying
from Evakuatsu.oracle import grid_min_max, grid_min_max_y, random_instance, random_positive_pwl
from Evakuatsu.profile import (
    LEFT,
    RIGHT,
    Box,
    EnvelopeRequest,
    ProfileManager,
    lue,
    m_edge,
    m_edge_single,
    m_k,
    min_max_profile,
    min_max_y_profile,
    rue,
)
from Evakuatsu.pwl import PwlFunction, add_constant
from Evakuatsu.utils import ProfileError, RunStats

from .conftest import scenario


def identity(lo=0, hi=1, slope=1):
    return PwlFunction.from_points((lo, hi), (slope * Fraction(lo), slope * Fraction(hi)))


def samples(lo, hi, steps=16):
    lo, hi = Fraction(lo), Fraction(hi)
    return [lo + (hi - lo) * Fraction(k, steps) for k in range(steps + 1)]


def random_box(rng, width=2):
    a1 = Fraction(int(rng.integers(0, 5)), 4)
    b1 = Fraction(int(rng.integers(0, 5)), 4)
    return Box(a1, a1 + Fraction(int(rng.integers(1, 4 * width + 1)), 4),
               b1, b1 + Fraction(int(rng.integers(1, 4 * width + 1)), 4))


def max_slope(*functions):
    return max(max(f.slopes, default=Fraction(0)) for f in functions)


# --- min_max_profile ---
def test_min_max_profile_unequal_slopes():
    profile = min_max_profile(identity(), identity(slope=2), Box(0, 1, 0, 1))
    assert profile.domain == (0, 2)
    assert profile.is_continuous
    assert profile.function == PwlFunction((0, Fraction(3, 2), 2), (0, 1, 2))
    assert profile(Fraction(1, 2)) == Fraction(1, 3)
    assert profile(Fraction(7, 4)) == Fraction(3, 2)


def test_min_max_profile_equal_functions():
    profile = min_max_profile(identity(), identity(), Box(0, 1, 0, 1))
    for alpha in samples(0, 2):
        assert profile(alpha) == alpha / 2


def test_min_max_profile_split_realizes_value():
    f_left, f_right = identity(), identity(slope=2)
    profile = min_max_profile(f_left, f_right, Box(0, 1, 0, 1))
    for alpha in samples(0, 2):
        split = profile.split_at(alpha)
        assert split.alpha == alpha
        assert max(f_left(split.alpha1), f_right(split.alpha2)) == profile(alpha)
    assert profile.split_at(1).alpha1 == Fraction(2, 3)


def test_min_max_profile_degenerate_box():
    profile = min_max_profile(identity(), identity(slope=2), Box.point(Fraction(1, 2), Fraction(1, 4)))
    assert profile.domain == (Fraction(3, 4), Fraction(3, 4))
    assert profile(Fraction(3, 4)) == Fraction(1, 2)


def test_min_max_profile_requires_positive_functions():
    with pytest.raises(ProfileError):
        min_max_profile(PwlFunction.constant(1, 0, 1), identity(), Box(0, 1, 0, 1))


def test_min_max_profile_requires_non_decreasing_functions():
    falling = PwlFunction.from_points((0, 1), (1, 0))
    with pytest.raises(ProfileError):
        min_max_profile(falling, identity(), Box(0, 1, 0, 1), strict=False)


def test_min_max_profile_requires_domain_cover():
    with pytest.raises(ProfileError):
        min_max_profile(identity(), identity(), Box(0, 2, 0, 1))


def test_min_max_profile_flat_functions():
    flat = PwlFunction.from_points((0, 1, 2), (0, 1, 1))
    profile = min_max_profile(flat, flat, Box(0, 2, 0, 2), strict=False)
    for alpha in samples(0, 4):
        assert profile(alpha) == grid_min_max(flat, flat, Box(0, 2, 0, 2), alpha, Fraction(1, 64))


def test_min_max_profile_matches_grid(rng):
    h = Fraction(1, 64)
    for _ in range(20):
        box = random_box(rng)
        f_left = random_positive_pwl(rng, box.a1, box.a2, 4)
        f_right = random_positive_pwl(rng, box.b1, box.b2, 4)
        profile = min_max_profile(f_left, f_right, box)
        assert profile.size <= 10 * (f_left.size + f_right.size)
        bound = max_slope(f_left, f_right) * h
        for alpha in samples(*box.domain, steps=12):
            value = profile(alpha)
            on_grid = grid_min_max(f_left, f_right, box, alpha, h)
            assert value <= on_grid
            assert on_grid - value <= bound


# --- min_max_y_profile ---
def test_min_max_y_profile_single_point():
    f_left = PwlFunction((Fraction(1),), (Fraction(1),))
    f_right = PwlFunction((Fraction(1),), (Fraction(4),))
    profile = min_max_y_profile(f_left, f_right, Box.point(1, 1), (0, 1))
    assert profile(2) == 3
    profile = min_max_y_profile(f_left, f_right, Box.point(1, 1), (0, 2))
    assert profile(2) == Fraction(5, 2)


def test_min_max_y_profile_zero_range_reduces():
    f_left, f_right = identity(), identity(slope=2)
    shifted = min_max_y_profile(f_left, f_right, Box(0, 1, 0, 1), (0, 0))
    plain = min_max_profile(f_left, f_right, Box(0, 1, 0, 1))
    for alpha in samples(0, 2):
        assert shifted(alpha) == plain(alpha)


def test_min_max_y_profile_rejects_empty_range():
    with pytest.raises(ProfileError):
        min_max_y_profile(identity(), identity(), Box(0, 1, 0, 1), (1, 0))


def test_min_max_y_profile_rejects_non_convex():
    bent = PwlFunction.from_points((0, 1, 2), (0, 2, 3))
    with pytest.raises(ProfileError):
        min_max_y_profile(bent, identity(0, 2), Box(0, 2, 0, 2), (0, 1))


def test_min_max_y_profile_interior_sweep_is_linear():
    f_left = PwlFunction.from_points((0, 1, 2), (0, 1, 3))
    profile = min_max_y_profile(f_left, identity(0, 2), Box(0, 2, 0, 2), (0, 1))
    assert profile(0) == 0
    assert RunStats.count("interior_steps") == f_left.size + identity(0, 2).size


def test_min_max_y_profile_matches_grid(rng):
    h = Fraction(1, 32)
    for _ in range(12):
        box = random_box(rng)
        f_left = random_positive_pwl(rng, box.a1, box.a2, 4, convex=True)
        f_right = random_positive_pwl(rng, box.b1, box.b2, 4, convex=True)
        ell = Fraction(int(rng.integers(-4, 5)), 4)
        y_range = (ell, ell + Fraction(int(rng.integers(0, 9)), 4))
        profile = min_max_y_profile(f_left, f_right, box, y_range)
        assert profile.size <= 10 * (f_left.size + f_right.size + 2)
        bound = (max_slope(f_left, f_right) + 1) * h
        for alpha in samples(*box.domain, steps=8):
            value = profile(alpha)
            on_grid = grid_min_max_y(f_left, f_right, box, y_range, alpha, h)
            assert value <= on_grid
            assert on_grid - value <= bound


# --- профили на вершине и на ребре ---
def test_m_k_on_point_box_equals_theta(t1):
    profile = m_k(t1, 0, 2, 1, Box.point(1, 1))
    assert profile(2) == theta(t1, 1, two_varying(t1, 0, 2, 1, 1)).theta


@pytest.mark.parametrize("k", [0, 1])
def test_m_edge_on_point_box_equals_edge_minimum(t1, k):
    profile = m_edge(t1, 0, 2, k, Box.point(1, 1))
    _, expected = theta_min_on_edge(t1, k, two_varying(t1, 0, 2, 1, 1))
    assert profile(2) == expected


def test_m_edge_requires_ordered_indices(t1):
    with pytest.raises(ProfileError):
        m_edge(t1, 1, 1, 0, Box.point(0, 0))
    with pytest.raises(ProfileError):
        m_edge(t1, 0, 1, 1, Box.point(0, 0))


def test_m_edge_point_boxes_on_random_instances(rng):
    for _ in range(8):
        instance = random_instance(rng, 3)
        k = int(rng.integers(0, 3))
        a = instance.weight_lo[0]
        b = instance.weight_hi[3]
        profile = m_edge(instance, 0, 3, k, Box.point(a, b))
        _, expected = theta_min_on_edge(instance, k, two_varying(instance, 0, 3, a, b))
        assert profile(a + b) == expected


def test_m_edge_matches_sampled_minimum(rng):
    steps = 16
    for _ in range(4):
        instance = random_instance(rng, 3)
        k = int(rng.integers(0, 3))
        box = Box(Fraction(1, 4), 2, Fraction(1, 4), 2)
        profile = m_edge(instance, 0, 3, k, box)
        h = Fraction(7, 4) / steps
        bound = h / instance.min_capacity_overall
        for alpha in samples(*box.domain, steps=6):
            lo, hi = box.slice(alpha)
            sampled = min(
                theta_min_on_edge(instance, k, two_varying(instance, 0, 3, a1, alpha - a1))[1]
                for a1 in samples(lo, hi, steps)
            )
            assert profile(alpha) <= sampled
            assert sampled - profile(alpha) <= bound


def test_m_edge_split_replays(rng):
    for _ in range(4):
        instance = random_instance(rng, 3)
        k = int(rng.integers(0, 3))
        box = Box(Fraction(1, 4), 2, Fraction(1, 4), 2)
        profile = m_edge(instance, 0, 3, k, box)
        for alpha in samples(*box.domain, steps=6):
            split = profile.split_at(alpha)
            assert box.contains(split.alpha1, split.alpha2)
            assert split.alpha == alpha
            assert instance.positions[k] <= split.y <= instance.positions[k + 1]
            s = two_varying(instance, 0, 3, split.alpha1, split.alpha2)
            assert theta(instance, split.y, s).theta == profile(alpha)


def test_m_edge_matches_full_shifted_profile(rng):
    for _ in range(4):
        instance = random_instance(rng, 3)
        k = int(rng.integers(0, 3))
        box = Box(0, 2, Fraction(1, 2), 3)
        base = two_varying(instance, 0, 3, 0, 0)
        x_k, x_next = instance.positions[k], instance.positions[k + 1]
        f_left = add_constant(lue(instance, EnvelopeRequest(base, 0, k + 1, LEFT, 0, 2)), -x_next)
        f_right = add_constant(rue(instance, EnvelopeRequest(base, 3, k, RIGHT, Fraction(1, 2), 3)), x_k)
        full = min_max_y_profile(f_left, f_right, box, (x_k, x_next), strict=False).floored(0)
        at_left, at_right = m_k(instance, 0, 3, k, box), m_k(instance, 0, 3, k + 1, box)
        profile = m_edge(instance, 0, 3, k, box)
        for alpha in samples(*box.domain, steps=12):
            assert profile(alpha) == min(at_left(alpha), at_right(alpha), full(alpha))


def test_m_edge_single_drops_to_zero(t1):
    profile = m_edge_single(t1, 0, 1, scenario(0, 0, 0), (0, 2))
    expected = {Fraction(0): 0, Fraction(1, 2): Fraction(3, 2), Fraction(1): 2, Fraction(2): 3}
    for alpha, value in expected.items():
        assert profile(alpha) == value


def test_m_edge_single_matches_edge_minimum(rng):
    for _ in range(6):
        instance = random_instance(rng, 3)
        j = int(rng.integers(0, 4))
        k = int(rng.integers(0, 3))
        base = two_varying(instance, j, j, 0, 0)
        profile = m_edge_single(instance, j, k, base, (0, 4))
        for alpha in samples(0, 4, steps=8):
            moved = two_varying(instance, j, j, alpha, alpha)
            assert profile(alpha) == theta_min_on_edge(instance, k, moved)[1]


# --- кэш ---
def test_manager_caches_profiles(t1):
    manager = ProfileManager(t1)
    first = manager.edge(0, 2, 0, Box(0, 2, 0, 2))
    second = manager.edge(0, 2, 0, Box(0, 2, 0, 2))
    assert first is second
    assert len(manager) == 3
    assert RunStats.count("medge") == 1
    assert RunStats.count("medge", cached=True) == 1
    assert RunStats.count("mk") == 2


def test_manager_shares_vertex_profiles_between_edges(t1):
    manager = ProfileManager(t1)
    box = Box(0, 2, 0, 2)
    manager.edge(0, 2, 0, box)
    manager.edge(0, 2, 1, box)
    assert RunStats.count("mk") == 3
    assert RunStats.count("mk", cached=True) == 1
    assert RunStats.count("lue") == 3
    assert RunStats.count("lue", cached=True) == 2


def test_manager_edges_match_direct_build(rng):
    for _ in range(3):
        instance = random_instance(rng, 3)
        manager = ProfileManager(instance)
        box = Box(0, 2, Fraction(1, 2), 3)
        for k in range(3):
            shared = manager.edge(0, 3, k, box)
            direct = m_edge(instance, 0, 3, k, box)
            for alpha in samples(*box.domain, steps=12):
                assert shared(alpha) == direct(alpha)


def test_manager_without_cache_rebuilds(t1):
    manager = ProfileManager(t1, cache=False)
    manager.vertex(0, 2, 1, Box(0, 2, 0, 2))
    manager.vertex(0, 2, 1, Box(0, 2, 0, 2))
    assert len(manager) == 0
    assert RunStats.count("mk") == 2
