import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rudin_shapiro.circle import (
    eval_grid,
    eval_point,
    eval_point_recursive,
    modulus_reflection_deviation,
    sup_modulus,
    sup_norm,
    tol_grid,
    unit_roots,
    verify_lemma31,
    verify_parallelogram,
)
from rudin_shapiro.core import generate
from rudin_shapiro.errors import GridTooLargeError
from rudin_shapiro.prng import LCG64


@pytest.mark.parametrize("N", [1, 2, 4, 8, 64, 1024])
def test_unit_roots_match_exp(N):
    w = unit_roots(N)
    assert np.allclose(w, np.exp(2j * np.pi * np.arange(N) / N), atol=1e-15)


def test_unit_roots_quarter_points_exact():
    w = unit_roots(64)
    assert w[0] == 1 and w[16] == 1j and w[32] == -1 and w[48] == -1j


def test_eval_point_by_hand():
    # P_1 = 1 + z, Q_1 = 1 - z
    p, q = eval_point(generate(1), math.pi / 2)
    assert p == pytest.approx(1 + 1j, abs=1e-15)
    assert q == pytest.approx(1 - 1j, abs=1e-15)
    # P_2(1) = 2, Q_2(1) = 2, P_2(-1) = 1-1+1+1 = 2, Q_2(-1) = 1-1-1-1 = -2
    assert eval_point(generate(2), 0.0) == (2, 2)
    p, q = eval_point(generate(2), math.pi)
    assert (p, q) == (2, -2)


def test_eval_grid_small_by_hand():
    g = eval_grid(generate(0), 4)
    assert np.array_equal(g.p_vals, np.ones(4))
    # P_2 = 1 + z + z^2 - z^3 at 1, i, -1, -i
    g = eval_grid(generate(2), 4)
    assert g.p_vals.tolist() == [2, 2j, 2, -2j]


@pytest.mark.parametrize("k", range(0, 13))
def test_grid_matches_horner(k):
    pair = generate(k)
    N = 4 * pair.n
    grid = eval_grid(pair, N)
    rng = LCG64(1000 + k)
    idx = sorted({int(rng.uniform() * N) for _ in range(64)})
    tol = 1e-9 * math.sqrt(2 * pair.n)
    for j in idx:
        p, q = eval_point(pair, 2 * math.pi * j / N)
        assert abs(grid.p_vals[j] - p) <= tol
        assert abs(grid.q_vals[j] - q) <= tol


def test_grid_size_checks():
    pair = generate(4)
    with pytest.raises(ValueError):
        eval_grid(pair, 24)
    with pytest.raises(ValueError):
        eval_grid(pair, 8)
    with pytest.raises(GridTooLargeError):
        eval_grid(pair, 1 << 10, n_max=1 << 9)


def test_grid_is_deterministic():
    pair = generate(11)
    a = eval_grid(pair)
    b = eval_grid(pair)
    assert np.array_equal(a.p_vals, b.p_vals) and np.array_equal(a.q_vals, b.q_vals)


def test_parallelogram_trivial_levels():
    assert verify_parallelogram(eval_grid(generate(0), 8)) == 0.0
    # k=1: |1+z|^2 + |1-z|^2 = 4 exactly at quarter points
    g = eval_grid(generate(1), 16)
    p, q = g.p_vals[::4], g.q_vals[::4]
    assert np.all(p.real**2 + p.imag**2 + q.real**2 + q.imag**2 == 4)


@pytest.mark.parametrize("k", range(0, 17))
def test_parallelogram_within_tolerance(k):
    grid = eval_grid(generate(k))
    dev = verify_parallelogram(grid)
    assert dev <= tol_grid(k)
    # regression ceiling: observed worst is ~0.034 * tol up to k=20
    assert dev <= 0.05 * tol_grid(k) or k < 2


@pytest.mark.parametrize("k", range(0, 17))
def test_modulus_reflection(k):
    assert modulus_reflection_deviation(eval_grid(generate(k))) <= tol_grid(k)


def test_lemma31_by_hand_k2():
    # n=4, z_0 = 1: P_2(1) = 2 = 2 P_0(1); z_1 = i: P_2(i) = 2i = (-1)^0 2i Q_0(i)
    p, _ = eval_point(generate(2), 0.0)
    assert p == 2
    p, _ = eval_point(generate(2), math.pi / 2)
    assert p == pytest.approx(2j, abs=1e-15)


@pytest.mark.parametrize("k", range(2, 17))
def test_lemma31_grid(k):
    assert verify_lemma31(k) <= tol_grid(k)


@pytest.mark.parametrize("k", range(2, 11))
def test_lemma31_grid_and_horner_agree(k):
    a = verify_lemma31(k, method="grid")
    b = verify_lemma31(k, method="horner")
    assert a <= tol_grid(k) and b <= tol_grid(k)


def test_lemma31_range():
    with pytest.raises(ValueError):
        verify_lemma31(1)
    with pytest.raises(ValueError):
        verify_lemma31(21)


@given(st.integers(0, 12), st.floats(0, 2 * math.pi))
@settings(max_examples=80, deadline=None)
def test_recursion_evaluator_matches_horner(k, t):
    pair = generate(k)
    p, q = eval_point_recursive(pair, np.array([t]))
    ph, qh = eval_point(pair, t)
    tol = 1e-9 * math.sqrt(2 * pair.n)
    assert abs(p[0] - ph) <= tol and abs(q[0] - qh) <= tol


@given(st.integers(0, 12), st.floats(0, 2 * math.pi))
@settings(max_examples=80, deadline=None)
def test_parallelogram_at_arbitrary_angle(k, t):
    p, q = eval_point(generate(k), t)
    assert abs(abs(p) ** 2 + abs(q) ** 2 - 2 ** (k + 1)) <= 1e-8 * 2**k


def test_sup_norm_small():
    # |1+z| peaks at z=1
    assert sup_norm(generate(1), "P") == pytest.approx(2.0, abs=1e-12)
    # |P_2|^2 = 4 + 2 cos t - 2 cos 3t from the autocorrelation [4, 1, 0, -1]
    t = np.linspace(0, 2 * np.pi, 200001)
    dense = np.sqrt(4 + 2 * np.cos(t) - 2 * np.cos(3 * t)).max()
    assert sup_norm(generate(2), "P") == pytest.approx(dense, abs=1e-8)


@pytest.mark.parametrize("k", range(1, 15))
def test_sup_norm_bounds(k):
    pair = generate(k)
    n = pair.n
    tol = tol_grid(k)
    for which in "PQ":
        s = sup_norm(pair, which)
        assert math.sqrt(n) <= s <= math.sqrt(2 * n) + tol
    assert sup_norm(pair, "R-n") <= n + tol


def test_sup_modulus_monomial_and_binomial():
    assert sup_modulus(np.array([0, 0, 1.0])) == pytest.approx(1.0)
    assert sup_modulus(np.array([1.0, 0, 0, 1.0])) == pytest.approx(2.0, abs=1e-12)
