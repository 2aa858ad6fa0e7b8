"""Zeros of R_k(t) - n on an arc [alpha, beta] of [0, 2 pi].

Three independent counts live here:

* :func:`count_zeros` -- certified crossings.  Every reported bracket has
  endpoint values of opposite sign, each larger in magnitude than the
  numerical noise floor, so it contains a zero by the intermediate value
  theorem.  Samples near zero are set aside as uncertain; local minima of
  |R_k - n| that come close to zero without a sign change are reported as
  suspect tangencies but never counted.
* :func:`oracle_count` -- a dense scan of the cosine series of R_k - n with
  tangency probing.  Meant as ground truth for k <= 8.
* :func:`proof_construction` -- sign-consistent neighbours in the sequence
  A_j = R_{k-2}(t_j) - n/4 at t_j = 2 pi j / n.  Each such neighbour pair
  forces a sign change of R_k - n on [t_j, t_{j+1}].

Boundary rule shared by the counts: a zero sitting exactly on the left end
alpha of an arc belongs to the arc to its left and is only counted when
alpha = 0; a zero at beta is counted.  Partitions of [0, 2 pi] are then
additive.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .circle import (
    TWO_PI,
    EvalGrid,
    eval_grid,
    golden_max,
    r_minus_n_at,
    tol_grid,
    unit_roots,
)
from .core import RudinShapiroPair, autocorrelation, generate
from .errors import ArcTooShortError, GridTooSmallError, LevelTooLargeError

ORACLE_K_MAX = 8
ORACLE_M_MIN = 10**5
TOL_BISECT = 1e-12
BISECT_BUDGET = 60
TANGENCY_REL = 1e-6


def tau_zero(k: int) -> float:
    """Values of R_k - n below this magnitude cannot certify a sign."""
    return 8.0 * tol_grid(k)


def tau_tangency(k: int) -> float:
    return (1 << k) * TANGENCY_REL


_ARC_TOKEN = re.compile(r"^[0-9eE.+\-*/() ]*$")


def parse_angle(text: str) -> float:
    """Parse ``1.5``, ``pi``, ``2pi``, ``pi/3``, ``3*pi/4`` and the like."""
    expr = text.strip().lower().replace("π", "pi")
    expr = re.sub(r"(\d)\s*pi", r"\1*pi", expr)
    if not _ARC_TOKEN.match(expr.replace("pi", "")):
        raise ValueError(f"cannot parse angle {text!r}")
    try:
        return float(eval(expr, {"__builtins__": {}}, {"pi": math.pi}))
    except (SyntaxError, ZeroDivisionError, TypeError) as exc:
        raise ValueError(f"cannot parse angle {text!r}") from exc


@dataclass(frozen=True)
class Arc:
    alpha: float
    beta: float

    def __post_init__(self):
        if not (0.0 <= self.alpha <= self.beta <= TWO_PI):
            raise ValueError(
                f"arc must satisfy 0 <= alpha <= beta <= 2pi, got [{self.alpha}, {self.beta}]"
            )

    @property
    def length(self) -> float:
        return self.beta - self.alpha

    @classmethod
    def full(cls) -> Arc:
        return cls(0.0, TWO_PI)

    @classmethod
    def parse(cls, text: str) -> Arc:
        if text.strip().lower() == "full":
            return cls.full()
        a, sep, b = text.partition(":")
        if not sep:
            raise ValueError(f"arc must look like alpha:beta, got {text!r}")
        return cls(parse_angle(a), parse_angle(b))


@dataclass(frozen=True)
class ZeroCountReport:
    k: int
    arc: Arc
    grid_N: int
    brackets: list = field(default_factory=list)
    suspect_tangencies: list = field(default_factory=list)
    uncertain_points: list = field(default_factory=list)
    refined_zeros: list = field(default_factory=list)

    @property
    def n(self) -> int:
        return 1 << self.k

    @property
    def certified_crossings(self) -> int:
        return len(self.brackets)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "alpha": self.arc.alpha,
            "beta": self.arc.beta,
            "grid_N": self.grid_N,
            "certified_crossings": self.certified_crossings,
            "suspect_tangencies": list(self.suspect_tangencies),
            "uncertain_points": list(self.uncertain_points),
            "brackets": [[lo, hi] for lo, hi in self.brackets],
            "refined_zeros": list(self.refined_zeros),
        }


def _interior_indices(arc: Arc, N: int) -> np.ndarray:
    h = TWO_PI / N
    lo = max(int(math.floor(arc.alpha / h)) - 1, 0)
    hi = min(int(math.ceil(arc.beta / h)) + 1, N - 1)
    j = np.arange(lo, hi + 1)
    t = h * j
    return j[(t > arc.alpha) & (t < arc.beta)]


def _bisect(pair: RudinShapiroPair, lo, hi):
    """Shrink all brackets at once; returns the final midpoints."""
    lo = np.array(lo, dtype=np.float64)
    hi = np.array(hi, dtype=np.float64)
    f_lo = r_minus_n_at(pair, lo)
    for _ in range(BISECT_BUDGET):
        if np.all(hi - lo <= TOL_BISECT):
            break
        mid = 0.5 * (lo + hi)
        f_mid = r_minus_n_at(pair, mid)
        left = np.sign(f_mid) != np.sign(f_lo)
        hi = np.where(left, mid, hi)
        lo = np.where(left, lo, mid)
        f_lo = np.where(left, f_lo, f_mid)
    return 0.5 * (lo + hi)


def count_zeros(
    pair: RudinShapiroPair,
    arc: Arc,
    N: int | None = None,
    refine: bool = False,
    grid: EvalGrid | None = None,
) -> ZeroCountReport:
    n = pair.n
    if N is None:
        N = grid.N if grid is not None else 8 * n
    if N < 8 * n:
        raise GridTooSmallError(f"grid size {N} is below 8n = {8 * n}")
    if arc.length == 0.0:
        return ZeroCountReport(pair.k, arc, N)
    if grid is None or grid.N != N or grid.k != pair.k:
        grid = eval_grid(pair, N)

    j = _interior_indices(arc, N)
    ts = np.concatenate(([arc.alpha], (TWO_PI / N) * j, [arc.beta]))
    ends = r_minus_n_at(pair, [arc.alpha, arc.beta])
    p = grid.p_vals[j]
    fs = np.concatenate(([ends[0]], p.real**2 + p.imag**2 - n, [ends[1]]))

    tau = tau_zero(pair.k)
    certain = np.abs(fs) >= tau
    idx = np.flatnonzero(certain)
    sgn = np.sign(fs[idx])
    flips = np.flatnonzero(sgn[1:] != sgn[:-1])
    brackets = list(zip(ts[idx[flips]].tolist(), ts[idx[flips + 1]].tolist()))

    # local minima of |f| that approach zero with no sign change around them
    a = np.abs(fs)
    small = a < tau_tangency(pair.k)
    is_min = np.zeros(len(fs), dtype=bool)
    is_min[1:-1] = (a[1:-1] <= a[:-2]) & (a[1:-1] <= a[2:])
    if len(fs) >= 2:
        is_min[0] = a[0] <= a[1]
        is_min[-1] = a[-1] <= a[-2]
    same = np.ones(len(fs), dtype=bool)
    same[1:-1] = np.sign(fs[:-2]) == np.sign(fs[2:])
    tangent = np.flatnonzero(small & is_min & same)

    refined = []
    if refine and brackets:
        lo, hi = zip(*brackets)
        refined = _bisect(pair, lo, hi).tolist()

    return ZeroCountReport(
        pair.k,
        arc,
        N,
        brackets=brackets,
        suspect_tangencies=ts[tangent].tolist(),
        uncertain_points=ts[~certain].tolist(),
        refined_zeros=refined,
    )


# -- dense oracle ----------------------------------------------------------


class _CosineSeries:
    """R_k(t) - n = 2 sum_{m>=1} c_m cos(m t), evaluated by Clenshaw."""

    def __init__(self, pair: RudinShapiroPair):
        self.c = autocorrelation(pair, "P").astype(np.float64)

    def __call__(self, t):
        t = np.atleast_1d(np.asarray(t, dtype=np.float64))
        return 2.0 * _kernels.cosine_series(self.c, t)


def _sign_changes(f, tau):
    s = np.sign(f[np.abs(f) >= tau])
    return int(np.count_nonzero(s[1:] != s[:-1]))


def _probe(series, t_left, t_right, t_guess, orient, tau, factor=100):
    """Hidden zeros strictly inside (t_left, t_right) where both ends share a sign.

    Rescans at ``factor`` times the coarse resolution around the quadratic
    vertex estimate, then polishes the extremum toward zero.  Returns the
    number of zeros found: sign changes in the rescan, or one touching zero.
    """
    half = 0.5 * (t_right - t_left)
    lo = max(t_left, t_guess - half)
    hi = min(t_right, t_guess + half)
    ts = np.linspace(lo, hi, 2 * factor + 1)
    fs = series(ts)
    changes = _sign_changes(fs, tau)
    if changes:
        return changes
    m = int(np.argmin(orient * fs))
    a, b = ts[max(m - 1, 0)], ts[min(m + 1, len(ts) - 1)]
    peak = golden_max(lambda t: -orient * series(t)[0], a, b, iters=80)
    return 1 if abs(peak) < tau else 0


def oracle_count(pair: RudinShapiroPair, arc: Arc, M: int = 10**6) -> int:
    """Brute-force number of distinct zeros of R_k - n in the arc (boundary rule applies)."""
    if pair.k > ORACLE_K_MAX:
        raise LevelTooLargeError(pair.k, ORACLE_K_MAX)
    if pair.k == 0:
        raise ValueError("R_0 - 1 vanishes identically")
    if M < ORACLE_M_MIN:
        raise ValueError(f"M must be >= {ORACLE_M_MIN}")
    series = _CosineSeries(pair)
    tau = tau_zero(pair.k)

    def endpoint_zero(t):
        return abs(series(t)[0]) < tau

    if arc.length == 0.0:
        return int(arc.alpha == 0.0 and endpoint_zero(0.0))

    ts = np.linspace(arc.alpha, arc.beta, M + 1)
    fs = series(ts)
    total = _sign_changes(fs, tau)
    total += int(arc.alpha == 0.0 and abs(fs[0]) < tau)
    total += int(abs(fs[-1]) < tau)

    a = np.abs(fs)
    zeroish = a < tau
    cand = np.flatnonzero(
        (a[1:-1] <= a[:-2])
        & (a[1:-1] <= a[2:])
        & (a[1:-1] < tau_tangency(pair.k))
        & (np.sign(fs[:-2]) == np.sign(fs[2:]))
        & ~zeroish[:-2]
        & ~zeroish[2:]
    ) + 1
    for i in cand:
        f0, f1, f2 = fs[i - 1], fs[i], fs[i + 1]
        denom = f0 - 2 * f1 + f2
        h = ts[1] - ts[0]
        shift = 0.5 * h * (f0 - f2) / denom if denom != 0 else 0.0
        guess = ts[i] + float(np.clip(shift, -h, h))
        total += _probe(series, ts[i - 1], ts[i + 1], guess, np.sign(f0), tau)

    # near-zero dips inside the two end cells, which the interior scan skips
    for i, j in ((0, 1), (len(fs) - 1, len(fs) - 2)):
        if not zeroish[i] and not zeroish[j] and a[i] < tau_tangency(pair.k) and a[i] <= a[j]:
            if np.sign(fs[i]) == np.sign(fs[j]):
                lo, hi = sorted((ts[i], ts[j]))
                total += _probe(series, lo, hi, 0.5 * (lo + hi), np.sign(fs[i]), tau)
    return total


# -- construction from the level k-2 samples --------------------------------


@dataclass(frozen=True)
class ProofReport:
    k: int
    arc: Arc
    h: int
    M: int
    N_pairs: int
    certified_distinct_lower: int
    intervals: list
    uncertain: int


def _first_at_or_after(x: float, n: int) -> int:
    step = TWO_PI / n
    j = int(math.ceil(x / step))
    while j > 0 and step * (j - 1) >= x - math.ulp(x):
        j -= 1
    while step * j < x - math.ulp(x):
        j += 1
    return j


def _last_at_or_before(x: float, n: int) -> int:
    step = TWO_PI / n
    j = int(math.floor(x / step))
    while step * (j + 1) <= x + math.ulp(x):
        j += 1
    while step * j > x + math.ulp(x):
        j -= 1
    return j


def grid_window(arc: Arc, n: int) -> tuple[int, int]:
    """(h, M) with t_h < alpha <= t_{h+1} < t_{h+M+1} <= beta < t_{h+M+2}."""
    h = _first_at_or_after(arc.alpha, n) - 1
    M = _last_at_or_before(arc.beta, n) - h - 1
    return h, M


def level_samples(k: int, js) -> tuple[np.ndarray, np.ndarray]:
    """A_j = R_{k-2}(t_j) - n/4 by Horner, plus a flag for exactly computed values.

    At quarter points z_j is one of +-1, +-i and every Horner step is an
    integer operation, so the value is exact.
    """
    n = 1 << k
    low = generate(k - 2)
    js = np.asarray(js, dtype=np.int64)
    z = unit_roots(n)[js % n]
    v = _kernels.horner_many(low.p, z)
    A = v.real**2 + v.imag**2 - n / 4
    exact = (4 * js) % n == 0
    return A, exact


def proof_construction(k: int, arc: Arc) -> ProofReport:
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    n = 1 << k
    if arc.length < 4 * math.pi / n:
        raise ArcTooShortError(f"|I| = {arc.length} is below 4pi/n = {4 * math.pi / n}")
    h, M = grid_window(arc, n)
    js = np.arange(h + 1, h + M + 2)
    A, exact = level_samples(k, js)
    ok = exact | (np.abs(A) >= tau_zero(k))
    hit = ok[:-1] & ok[1:] & (A[:-1] * A[1:] >= 0)
    step = TWO_PI / n
    lefts = js[:-1][hit]
    intervals = [(step * j, step * (j + 1)) for j in lefts.tolist()]
    n_pairs = len(intervals)
    return ProofReport(
        k,
        arc,
        h,
        M,
        n_pairs,
        (n_pairs + 1) // 2,
        intervals,
        int(np.count_nonzero(~ok)),
    )


@dataclass(frozen=True)
class ChainCheck:
    k: int
    checked: int
    worst_product: float
    max_identity_gap: float
    tau_chain: float

    @property
    def passed(self) -> bool:
        return self.worst_product <= self.tau_chain and self.max_identity_gap <= self.tau_chain


def chain_check(k: int) -> ChainCheck:
    """Check (R_k(t_j)-n)(R_k(t_{j+1})-n) = -16 A_j A_{j+1} on all n residues.

    R_k comes from the butterfly grid at N = n and A_j from Horner at level
    k-2, so the two sides share no code path.  ``worst_product`` is the
    largest left-hand side among pairs with A_j A_{j+1} >= tau_zero^2.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    n = 1 << k
    g = eval_grid(generate(k), n)
    f = g.r_vals - n
    js = np.arange(n)
    A, _ = level_samples(k, js)
    f_next, A_next = np.roll(f, -1), np.roll(A, -1)
    lhs = f * f_next
    rhs = -16.0 * A * A_next
    sel = A * A_next >= tau_zero(k) ** 2
    worst = float(np.max(lhs[sel])) if np.any(sel) else -math.inf
    return ChainCheck(
        k,
        int(np.count_nonzero(sel)),
        worst,
        float(np.max(np.abs(lhs - rhs))),
        tol_grid(k) * n,
    )
