"""Complex roots of small-degree polynomials and their angular distribution."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .bounds import theorem11
from .circle import TWO_PI, sup_modulus
from .errors import NonConvergenceError
from .zeros import Arc

DEGREE_MAX = 1024
SWEEP_BUDGET = 500
GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))
ANGLE_SNAP = 1e-12


@dataclass(frozen=True, eq=False)
class RootSet:
    degree: int
    roots: np.ndarray
    residual: float

    @property
    def angles(self) -> np.ndarray:
        theta = np.mod(np.angle(self.roots), TWO_PI)
        theta[(theta < ANGLE_SNAP) | (theta > TWO_PI - ANGLE_SNAP)] = 0.0
        return theta

    @property
    def moduli(self) -> np.ndarray:
        return np.abs(self.roots)

    def rows(self):
        for z, rho, theta in zip(self.roots, self.moduli, self.angles):
            yield {"re": z.real, "im": z.imag, "rho": rho, "theta": theta}


def default_tau_root(coeffs) -> float:
    c = np.asarray(coeffs)
    return 1e-8 * (len(c) - 1) * float(np.max(np.abs(c)))


def find_roots(coeffs, tau_root: float | None = None, max_sweeps: int = SWEEP_BUDGET) -> RootSet:
    """All roots of sum_j coeffs[j] z^j by Aberth-Ehrlich iteration.

    ``residual`` is max_j |p(z_j)| / max(1, |z_j|)^deg, i.e. the residual
    measured on the scale at which p is evaluated.
    """
    a = np.asarray(coeffs, dtype=np.complex128)
    deg = len(a) - 1
    if deg < 1:
        raise ValueError("need a polynomial of degree >= 1")
    if deg > DEGREE_MAX:
        raise ValueError(f"degree {deg} exceeds {DEGREE_MAX}")
    if a[-1] == 0:
        raise ValueError("leading coefficient must be nonzero")
    if tau_root is None:
        tau_root = default_tau_root(a)

    zeros_at_origin = int(np.argmax(a != 0))
    b = a[zeros_at_origin:]
    d = len(b) - 1
    roots = np.zeros(zeros_at_origin, dtype=np.complex128)
    if d == 0:
        return RootSet(deg, roots, 0.0)

    radius = (abs(b[0]) / abs(b[-1])) ** (1.0 / d)
    j = np.arange(d)
    z = radius * np.exp(1j * (TWO_PI * j / d + GOLDEN_ANGLE))
    for _ in range(max_sweeps):
        ratio, _ = _kernels.newton_ratio(b, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        step = ratio / (1.0 - ratio * inv.sum(axis=1))
        z = z - step
        if np.all(np.abs(step) <= 1e-14 * np.maximum(1.0, np.abs(z))):
            break
    else:
        raise NonConvergenceError(f"Aberth iteration did not settle in {max_sweeps} sweeps")

    # Newton polish, keeping a step only if it lowers the residual
    for _ in range(3):
        ratio, before = _kernels.newton_ratio(b, z)
        cand = z - ratio
        _, after = _kernels.newton_ratio(b, cand)
        z = np.where(after < before, cand, z)

    _, scaled = _kernels.newton_ratio(b, z)
    residual = float(np.max(scaled))
    if residual > tau_root:
        raise NonConvergenceError(f"root residual {residual:.3e} exceeds {tau_root:.3e}")
    return RootSet(deg, np.concatenate((roots, z)), residual)


def angular_count(rs: RootSet, arc: Arc, half_open: bool = False) -> int:
    """Roots with angle in [alpha, beta] (or [alpha, beta) when ``half_open``)."""
    theta = rs.angles
    inside = theta >= arc.alpha
    inside &= (theta < arc.beta) if half_open else (theta <= arc.beta)
    return int(np.count_nonzero(inside))


@dataclass(frozen=True)
class DiscrepancyRow:
    arc: Arc
    count: int
    expected: float
    discrepancy: float
    bound: float

    @property
    def violated(self) -> bool:
        return self.discrepancy > self.bound


@dataclass(frozen=True)
class DiscrepancyReport:
    degree: int
    H: float
    constant: str
    residual: float
    rows: list

    @property
    def violations(self) -> int:
        return sum(r.violated for r in self.rows)


def erdos_turan_height(coeffs) -> float:
    """max |P| on the circle over |a_0|^(1/2), for P normalised to be monic."""
    a = np.asarray(coeffs, dtype=np.complex128)
    monic = a / a[-1]
    if monic[0] == 0:
        raise ValueError("constant coefficient must be nonzero")
    return max(1.0, sup_modulus(monic) / math.sqrt(abs(monic[0])))


def verify_theorem11(coeffs, arcs, constant: str = "sound8pi", rs: RootSet | None = None) -> DiscrepancyReport:
    a = np.asarray(coeffs, dtype=np.complex128)
    if a[0] == 0:
        raise ValueError("constant coefficient must be nonzero")
    if rs is None:
        rs = find_roots(a)
    deg = rs.degree
    H = erdos_turan_height(a)
    bound = theorem11(deg, H, None, constant)
    rows = []
    for arc in arcs:
        count = angular_count(rs, arc)
        expected = deg * arc.length / TWO_PI
        rows.append(DiscrepancyRow(arc, count, expected, abs(count - expected), bound))
    return DiscrepancyReport(deg, H, constant, rs.residual, rows)
