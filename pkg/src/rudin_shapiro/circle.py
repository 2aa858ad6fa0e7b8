"""Evaluation of P_k, Q_k and R_k = |P_k|^2 on the unit circle.

Two routes are provided: Horner on the exact integer coefficients (the
reference, O(n) per point) and a level-by-level butterfly that applies the
doubling recursion pointwise on an N-point grid in O(k N).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .core import RudinShapiroPair, generate
from .errors import GridTooLargeError

EPS = float(np.finfo(np.float64).eps)
N_MAX = 1 << 24
TWO_PI = 2.0 * math.pi
_QUARTER = (1.0 + 0.0j, 1.0j, -1.0 + 0.0j, -1.0j)


def tol_grid(k: int) -> float:
    """Floating-point allowance for grid quantities of size ~n at level k."""
    return 64.0 * k * EPS * (1 << k)


def unit_roots(N: int) -> np.ndarray:
    """exp(2 pi i m / N) for m = 0..N-1, accurate to about one ulp.

    Angles are folded into the first octant before calling cos/sin and the
    quadrant is restored by exact swaps, so the quarter points are exact and
    no error accumulates with m.
    """
    if N & (N - 1) or N < 1:
        raise ValueError(f"N must be a power of two, got {N}")
    if N < 8:
        return unit_roots(8)[:: 8 // N].copy()
    m = np.arange(N, dtype=np.int64)
    quarter = N // 4
    quad = m // quarter
    r = m % quarter
    upper = r > N // 8
    folded = np.where(upper, quarter - r, r)
    ang = (TWO_PI / N) * folded
    c, s = np.cos(ang), np.sin(ang)
    re = np.where(upper, s, c)
    im = np.where(upper, c, s)
    # multiply by i**quad exactly
    out = np.empty(N, dtype=np.complex128)
    out.real = np.choose(quad, [re, -im, -re, im])
    out.imag = np.choose(quad, [im, re, -im, -re])
    return out


def circle_point(t: float) -> complex:
    """e^{it}, exact at multiples of pi/2 (within a few ulps of the angle)."""
    t = math.fmod(t, TWO_PI)
    if t < 0:
        t += TWO_PI
    q = round(t / (math.pi / 2))
    if abs(t - q * (math.pi / 2)) <= 4 * math.ulp(max(t, 1.0)):
        return _QUARTER[q % 4]
    return complex(math.cos(t), math.sin(t))


def circle_points(ts) -> np.ndarray:
    return np.array([circle_point(float(t)) for t in np.ravel(ts)], dtype=np.complex128)


def eval_point(pair: RudinShapiroPair, t: float) -> tuple[complex, complex]:
    """(P_k(e^{it}), Q_k(e^{it})) by Horner on the integer coefficients."""
    z = np.array([circle_point(t)])
    return (
        complex(_kernels.horner_many(pair.p, z)[0]),
        complex(_kernels.horner_many(pair.q, z)[0]),
    )


def eval_points(pair: RudinShapiroPair, ts, which: str = "P") -> np.ndarray:
    """Vectorised Horner of one polynomial of the pair at angles ``ts``."""
    return _kernels.horner_many(pair.coeffs(which), circle_points(ts))


def eval_point_recursive(pair: RudinShapiroPair, ts) -> tuple[np.ndarray, np.ndarray]:
    """P_k and Q_k at angles ``ts`` by running the doubling recursion pointwise.

    Costs O(k) per angle and its rounding error grows like k rather than n,
    which makes it the better polisher at large levels.
    """
    ts = np.atleast_1d(np.asarray(ts, dtype=np.float64))
    p = np.empty(ts.shape[0], dtype=np.complex128)
    q = np.empty(ts.shape[0], dtype=np.complex128)
    _kernels.recursion_points(pair.k, ts, p, q)
    return p, q


def r_minus_n_at(pair: RudinShapiroPair, ts) -> np.ndarray:
    vals = eval_points(pair, ts, "P")
    return vals.real**2 + vals.imag**2 - pair.n


@dataclass(frozen=True, eq=False)
class EvalGrid:
    """Values at t_j = 2 pi j / N, j = 0..N-1."""

    k: int
    N: int
    p_vals: np.ndarray
    q_vals: np.ndarray

    @property
    def n(self) -> int:
        return 1 << self.k

    @property
    def r_vals(self) -> np.ndarray:
        return self.p_vals.real**2 + self.p_vals.imag**2

    @property
    def angles(self) -> np.ndarray:
        return (TWO_PI / self.N) * np.arange(self.N)


def eval_grid(pair: RudinShapiroPair, N: int | None = None, n_max: int = N_MAX) -> EvalGrid:
    if N is None:
        N = 8 * pair.n
    if N > n_max:
        raise GridTooLargeError(f"grid size {N} exceeds the cap {n_max}")
    if N < pair.n or N & (N - 1):
        raise ValueError(f"N must be a power of two >= n={pair.n}, got {N}")
    p = np.empty(N, dtype=np.complex128)
    q = np.empty(N, dtype=np.complex128)
    _kernels.butterfly(pair.k, unit_roots(N), p, q)
    p.flags.writeable = False
    q.flags.writeable = False
    return EvalGrid(pair.k, N, p, q)


def verify_parallelogram(grid: EvalGrid) -> float:
    s = grid.r_vals + grid.q_vals.real**2 + grid.q_vals.imag**2
    return float(np.max(np.abs(s - 2 * grid.n)))


def modulus_reflection_deviation(grid: EvalGrid) -> float:
    """max_j | |Q(e^{i(t_j+pi)})| - |P(e^{it_j})| |, via the N/2 index shift."""
    shifted = np.roll(grid.q_vals, -(grid.N // 2))
    return float(np.max(np.abs(np.abs(shifted) - np.abs(grid.p_vals))))


def _lemma31_rhs(p_low, q_low, n):
    j = np.arange(n)
    odd_sign = np.where(((j - 1) // 2) % 2 == 0, 1.0, -1.0)
    return np.where(j % 2 == 0, 2.0 * p_low, odd_sign * 2j * q_low)


def verify_lemma31(k: int, method: str = "grid", pair: RudinShapiroPair | None = None) -> float:
    """max_j |P_k(z_j) - rhs_j| at z_j = e^{2 pi i j / n}, j = 0..n-1.

    rhs_j is 2 P_{k-2}(z_j) for even j and (-1)^((j-1)/2) 2i Q_{k-2}(z_j) for
    odd j.  ``method="horner"`` evaluates both sides pointwise instead of via
    the butterfly (O(n^2), for small k).  A supplied ``pair`` replaces the
    generated level-k polynomial on the left-hand side.
    """
    if not 2 <= k <= 20:
        raise ValueError(f"k must be in 2..20, got {k}")
    hi = generate(k) if pair is None else pair
    if hi.k != k:
        raise ValueError(f"pair has level {hi.k}, expected {k}")
    lo = generate(k - 2)
    n = hi.n
    if method == "grid":
        g_hi = eval_grid(hi, n)
        g_lo = eval_grid(lo, n)
        lhs, p_lo, q_lo = g_hi.p_vals, g_lo.p_vals, g_lo.q_vals
    elif method == "horner":
        z = unit_roots(n)
        lhs = _kernels.horner_many(hi.p, z)
        p_lo = _kernels.horner_many(lo.p, z)
        q_lo = _kernels.horner_many(lo.q, z)
    else:
        raise ValueError(f"unknown method {method!r}")
    return float(np.max(np.abs(lhs - _lemma31_rhs(p_lo, q_lo, n))))


def golden_max(f, a, b, iters=60):
    invphi = (math.sqrt(5) - 1) / 2
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    return max(fc, fd)


def sup_norm(pair: RudinShapiroPair, which: str = "P", N: int | None = None) -> float:
    """Sup over the circle of |P|, |Q| or |R - n| (``which="R-n"``).

    Grid maximum, then a golden-section polish on the two cells around the
    best grid point.
    """
    n = pair.n
    if N is None:
        N = 8 * n
    if N < 8 * n:
        raise ValueError(f"N must be >= 8n = {8 * n}")
    grid = eval_grid(pair, N)
    if which in ("P", "p"):
        vals = np.abs(grid.p_vals)
        f = lambda t: abs(eval_point_recursive(pair, t)[0][0])  # noqa: E731
    elif which in ("Q", "q"):
        vals = np.abs(grid.q_vals)
        f = lambda t: abs(eval_point_recursive(pair, t)[1][0])  # noqa: E731
    elif which in ("R-n", "R", "r"):
        vals = np.abs(grid.r_vals - n)
        f = lambda t: abs(abs(eval_point_recursive(pair, t)[0][0]) ** 2 - n)  # noqa: E731
    else:
        raise ValueError(f"unknown selector {which!r}")
    j = int(np.argmax(vals))
    h = TWO_PI / N
    best = float(vals[j])
    return max(best, golden_max(f, (j - 1) * h, (j + 1) * h))


def sup_modulus(coeffs, N: int | None = None) -> float:
    """Sup of |A(z)| on |z| = 1 for an arbitrary coefficient vector (low first)."""
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    d = len(coeffs) - 1
    if N is None:
        N = 8 * max(1, 1 << max(d, 1).bit_length())
    z = unit_roots(N)
    vals = np.abs(_kernels.horner_many(coeffs, z))
    j = int(np.argmax(vals))
    h = TWO_PI / N

    def f(t):
        return abs(_kernels.horner_many(coeffs, np.array([circle_point(t)]))[0])

    return max(float(vals[j]), golden_max(f, (j - 1) * h, (j + 1) * h))
