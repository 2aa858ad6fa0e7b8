import math

import numpy as np

from rudin_shapiro.prng import INCREMENT, MULTIPLIER, LCG64, arcs_for_level, random_arcs


def test_lcg_matches_wrapping_uint64():
    gen = LCG64(42)
    x = np.uint64(42)
    with np.errstate(over="ignore"):
        for _ in range(100):
            x = np.uint64(MULTIPLIER) * x + np.uint64(INCREMENT)
            assert gen.next_u64() == int(x)


def test_first_draw_from_zero_seed():
    gen = LCG64(0)
    assert gen.next_u64() == INCREMENT
    assert LCG64(0).uniform() == (INCREMENT >> 11) / 2.0**53


def test_uniform_range():
    gen = LCG64(1)
    u = [gen.uniform() for _ in range(10_000)]
    assert 0.0 <= min(u) and max(u) < 1.0
    assert abs(sum(u) / len(u) - 0.5) < 0.02


def test_random_arcs_deterministic_and_long_enough():
    a = random_arcs(25, seed=42, min_length=1.0)
    b = random_arcs(25, seed=42, min_length=1.0)
    assert a == b
    assert all(arc.length >= 1.0 for arc in a)
    assert random_arcs(5, seed=43) != random_arcs(5, seed=42)


def test_arcs_for_level_min_length():
    for k in (2, 5, 12):
        assert all(arc.length >= 4 * math.pi / 2**k for arc in arcs_for_level(k, 20, 42))
