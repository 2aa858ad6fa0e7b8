"""Compiled inner loops.  Each output index depends only on its own inputs."""

import numba as nb
import numpy as np

# TBB in this environment is too old; numba warns on every first launch.
nb.config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]


@nb.njit(parallel=True, cache=True)
def butterfly(k, table, p_out, q_out):
    # table[m] = exp(2 pi i m / N); N = len(table), a power of two.
    mask = table.shape[0] - 1
    for j in nb.prange(table.shape[0]):
        p = 1.0 + 0.0j
        q = 1.0 + 0.0j
        for s in range(k):
            wq = table[(j << s) & mask] * q
            p, q = p + wq, p - wq
        p_out[j] = p
        q_out[j] = q


@nb.njit(parallel=True, cache=True)
def horner_many(coeffs, z):
    out = np.empty(z.shape[0], dtype=np.complex128)
    last = coeffs.shape[0] - 1
    for i in nb.prange(z.shape[0]):
        zi = z[i]
        acc = complex(coeffs[last])
        for j in range(last - 1, -1, -1):
            acc = acc * zi + coeffs[j]
        out[i] = acc
    return out


@nb.njit(parallel=True, cache=True)
def cosine_series(c, t):
    """sum_{m>=1} c[m] cos(m t) for each t, by Clenshaw's recurrence."""
    out = np.empty(t.shape[0], dtype=np.float64)
    top = c.shape[0] - 1
    for i in nb.prange(t.shape[0]):
        x = np.cos(t[i])
        b1 = 0.0
        b2 = 0.0
        for m in range(top, 0, -1):
            b0 = c[m] + 2.0 * x * b1 - b2
            b2 = b1
            b1 = b0
        # sum_{m>=0} = b1*x - b2 + c0 with c0 excluded here
        out[i] = b1 * x - b2
    return out


@nb.njit(cache=True)
def newton_ratio(coeffs, z):
    """p(z)/p'(z) and |p(z)| / max(1, |z|)^deg for each z.

    Outside the unit disk the reversed polynomial is evaluated at 1/z, which
    keeps every intermediate of modest size.
    """
    deg = coeffs.shape[0] - 1
    ratio = np.empty(z.shape[0], dtype=np.complex128)
    scaled = np.empty(z.shape[0], dtype=np.float64)
    for i in range(z.shape[0]):
        zi = z[i]
        if abs(zi) <= 1.0:
            p = coeffs[deg]
            dp = 0.0 + 0.0j
            for j in range(deg - 1, -1, -1):
                dp = dp * zi + p
                p = p * zi + coeffs[j]
            ratio[i] = p / dp if dp != 0 else 0.0
            scaled[i] = abs(p)
        else:
            w = 1.0 / zi
            q = coeffs[0]
            dq = 0.0 + 0.0j
            for j in range(1, deg + 1):
                dq = dq * w + q
                q = q * w + coeffs[j]
            # p(z) = z^deg q(w), so p'/p = w (deg - w q'(w)/q(w))
            denom = deg * q - w * dq
            ratio[i] = zi * q / denom if denom != 0 else 0.0
            scaled[i] = abs(q)
    return ratio, scaled


# 2 pi split into a double plus a correction term, for argument reduction
TWO_PI_HI = 6.283185307179586
TWO_PI_LO = 2.4492935982947064e-16


@nb.njit(parallel=True, cache=True)
def recursion_points(k, t, p_out, q_out):
    """The butterfly at arbitrary angles: O(k) per point instead of O(n)."""
    for i in nb.prange(t.shape[0]):
        p = 1.0 + 0.0j
        q = 1.0 + 0.0j
        x = t[i]
        for s in range(k):
            m = np.floor(x / TWO_PI_HI)
            r = (x - m * TWO_PI_HI) - m * TWO_PI_LO
            wq = complex(np.cos(r), np.sin(r)) * q
            p, q = p + wq, p - wq
            x = 2.0 * x
        p_out[i] = p
        q_out[i] = q
