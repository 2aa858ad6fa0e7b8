"""Exact construction of the Rudin-Shapiro pair and integer-exact checks.

The pair is built by the doubling recursion

    P_{k+1}(z) = P_k(z) + z^(2^k) Q_k(z)
    Q_{k+1}(z) = P_k(z) - z^(2^k) Q_k(z)

starting from P_0 = Q_0 = 1.  Coefficients are stored lowest degree first as
``int8`` arrays, so ``pair.p[j]`` is the coefficient of ``z**j``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import IdentityViolation, LevelTooLargeError

DEFAULT_K_MAX = 26
STURM_K_MAX = 8
DIRECT_AUTOCORR_MAX_N = 4096


def k_max() -> int:
    """Level cap, overridable through ``SHAPIRO_KMAX``."""
    raw = os.environ.get("SHAPIRO_KMAX")
    return int(raw) if raw else DEFAULT_K_MAX


@dataclass(frozen=True, eq=False)
class RudinShapiroPair:
    k: int
    p: np.ndarray
    q: np.ndarray

    @property
    def n(self) -> int:
        return 1 << self.k

    def coeffs(self, which: str) -> np.ndarray:
        if which in ("P", "p"):
            return self.p
        if which in ("Q", "q"):
            return self.q
        raise ValueError(f"which must be 'P' or 'Q', got {which!r}")

    def __eq__(self, other):
        if not isinstance(other, RudinShapiroPair):
            return NotImplemented
        return (
            self.k == other.k
            and np.array_equal(self.p, other.p)
            and np.array_equal(self.q, other.q)
        )

    def __repr__(self):
        return f"RudinShapiroPair(k={self.k}, n={self.n})"


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.int8)
    a.flags.writeable = False
    return a


def generate(k: int) -> RudinShapiroPair:
    cap = k_max()
    if k < 0:
        raise ValueError(f"level must be non-negative, got {k}")
    if k > cap:
        raise LevelTooLargeError(k, cap)
    p = np.ones(1, dtype=np.int8)
    q = np.ones(1, dtype=np.int8)
    for _ in range(k):
        p, q = np.concatenate((p, q)), np.concatenate((p, -q))
    return RudinShapiroPair(k, _frozen(p), _frozen(q))


def from_coefficients(k: int, p, q) -> RudinShapiroPair:
    """Wrap externally supplied coefficient vectors (e.g. a parsed file).

    Only the shape and the ``+1/-1`` alphabet are enforced here; the
    recursion-level invariants are left to :func:`check_invariants` so that a
    corrupted file can be loaded and then diagnosed.
    """
    p = np.asarray(p)
    q = np.asarray(q)
    n = 1 << k
    if p.shape != (n,) or q.shape != (n,):
        raise ValueError(f"expected two vectors of length {n} for k={k}")
    if not (np.all(np.abs(p) == 1) and np.all(np.abs(q) == 1)):
        raise ValueError("coefficients must all be +1 or -1")
    return RudinShapiroPair(k, _frozen(p), _frozen(q))


def check_invariants(pair: RudinShapiroPair) -> None:
    """Raise :class:`IdentityViolation` on the first broken structural invariant."""
    n = pair.n
    p, q = pair.p, pair.q
    if len(p) != n or len(q) != n:
        raise IdentityViolation(f"length mismatch, expected n={n}", 0)
    for name, v in (("P", p), ("Q", q)):
        bad = np.flatnonzero(np.abs(v.astype(np.int16)) != 1)
        if bad.size:
            raise IdentityViolation(f"{name} coefficient not +-1", int(bad[0]))
    if p[0] != 1 or q[0] != 1:
        raise IdentityViolation("constant terms must be +1", 0)
    if pair.k >= 1:
        h = n // 2
        bad = np.flatnonzero(p[:h] != q[:h])
        if bad.size:
            raise IdentityViolation("first halves of P and Q differ", int(bad[0]))
        bad = np.flatnonzero(p[h:] != -q[h:])
        if bad.size:
            raise IdentityViolation(
                "second halves of P and Q are not negations", h + int(bad[0])
            )


def reversal_identity_check(pair: RudinShapiroPair) -> int:
    """Return the global sign eps with (-1)^j q[j] == eps * p[n-1-j] for all j.

    This is the coefficient form of Q(-z) = eps * z^(n-1) P(1/z).  The sign
    is not constant across levels (it is -1 at k=2), so it is returned rather
    than assumed.
    """
    n = pair.n
    alt = np.where(np.arange(n) % 2 == 0, 1, -1).astype(np.int8) * pair.q
    rev = pair.p[::-1]
    eps = int(alt[0] * rev[0])
    bad = np.flatnonzero(alt != eps * rev)
    if bad.size:
        j = int(bad[0])
        raise IdentityViolation(
            f"reversal identity fails at j={j} for global sign {eps:+d}", j
        )
    return eps


def autocorrelation(pair: RudinShapiroPair, which: str = "P", method: str = "auto") -> np.ndarray:
    """Aperiodic autocorrelations c_0..c_{n-1} of the chosen coefficient vector.

    R(t) = |A(e^{it})|^2 = c_0 + 2 * sum_{m>=1} c_m cos(m t).
    """
    a = pair.coeffs(which).astype(np.int64)
    n = len(a)
    if method == "auto":
        method = "direct" if n <= DIRECT_AUTOCORR_MAX_N else "fft"
    if method == "direct":
        return np.correlate(a, a, mode="full")[n - 1:].copy()
    if method != "fft":
        raise ValueError(f"unknown method {method!r}")
    size = 2 * n
    spec = np.fft.rfft(a.astype(np.float64), size)
    raw = np.fft.irfft(spec.real**2 + spec.imag**2, size)[:n]
    c = np.rint(raw)
    # |c_m| <= n, so a residue this large means the transform lost exactness.
    if np.max(np.abs(raw - c)) > 0.25:
        raise ArithmeticError("transform-based autocorrelation lost integer exactness")
    return c.astype(np.int64)


# -- Sturm sequences over the integers -------------------------------------
# Polynomials are lists of Python ints, highest degree first.


def _strip(f):
    i = 0
    while i < len(f) - 1 and f[i] == 0:
        i += 1
    return f[i:]


def _primitive(f):
    g = 0
    for c in f:
        g = gcd(g, c)
    if g > 1:
        f = [c // g for c in f]
    return f


def _neg_prem(f, g):
    """-(remainder of f by g), scaled by a positive factor and made primitive.

    Pseudo-division multiplies f by lc(g)^(deg f - deg g + 1); we use the
    absolute value so the sign pattern of the rational remainder survives.
    """
    lc = g[0]
    dg = len(g) - 1
    r = list(f)
    scale = abs(lc)
    sgn = 1 if lc > 0 else -1
    while len(r) - 1 >= dg and any(r):
        # r <- |lc| * r - sign(lc) * r[0] * x^(deg r - dg) * g
        lead = r[0]
        r = [scale * c for c in r]
        for i in range(len(g)):
            r[i] -= sgn * lead * g[i]
        r = r[1:] if len(r) > 1 else [0]
        r = _strip(r)
    if not any(r):
        return [0]
    return _primitive([-c for c in r])


def sturm_chain(coeffs_high_first):
    f = _primitive(_strip([int(c) for c in coeffs_high_first]))
    d = len(f) - 1
    if d <= 0:
        return [f]
    df = _primitive([c * (d - i) for i, c in enumerate(f[:-1])])
    chain = [f, df]
    while len(chain[-1]) > 1:
        r = _neg_prem(chain[-2], chain[-1])
        if r == [0]:
            break
        chain.append(r)
    return chain


def _variations(signs):
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(coeffs_high_first) -> int:
    """Number of distinct real roots of an integer polynomial."""
    chain = sturm_chain(coeffs_high_first)
    if len(chain[0]) == 1:
        return 0
    at_pos = [1 if c[0] > 0 else -1 for c in chain]
    at_neg = [s if (len(c) - 1) % 2 == 0 else -s for s, c in zip(at_pos, chain)]
    return _variations(at_neg) - _variations(at_pos)


def real_zero_count(pair: RudinShapiroPair, which: str = "P") -> int:
    if pair.k > STURM_K_MAX:
        raise LevelTooLargeError(pair.k, STURM_K_MAX)
    a = pair.coeffs(which)
    return count_real_roots(a[::-1].tolist())
