"""Closed-form bounds on zero counts.

All logarithms are natural unless ``log_base`` is given.  Values are returned
raw: a negative lower bound is vacuous but is not clamped here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .zeros import Arc

KINDS = ("theorem21", "lemma32", "lemma33", "lemma34", "theorem11_classic", "theorem11_sound")
CONSTANTS = {"classic16": 16.0, "sound8pi": 8.0 / math.pi}


def _log(x: float, base: float) -> float:
    return math.log(x) if base == math.e else math.log(x) / math.log(base)


@dataclass(frozen=True)
class BoundReport:
    kind: str
    k_or_m: int
    arc: Arc
    lower: float
    upper: float
    log_base: float = math.e

    def row(self) -> dict:
        return {
            "kind": self.kind,
            "k_or_m": self.k_or_m,
            "alpha": self.arc.alpha,
            "beta": self.arc.beta,
            "lower": self.lower,
            "upper": self.upper,
            "log_base": self.log_base,
        }


def _radical(n: int, base: float) -> float:
    """(2 n log n)^(1/2)"""
    return math.sqrt(2 * n * _log(n, base))


def theorem21(k: int, arc: Arc, log_base: float = math.e) -> BoundReport:
    if k < 2:
        raise ValueError(f"the two-sided count bound needs k >= 2, got {k}")
    n = 1 << k
    r = _radical(n, log_base)
    lower = n * arc.length / (8 * math.pi) - (2 / math.pi) * r - 1
    upper = n * arc.length / math.pi + (8 / math.pi) * r
    return BoundReport("theorem21", k, arc, lower, upper, log_base)


def lemma32(m: int, H: float, arc: Arc, log_base: float = math.e) -> float:
    """Upper bound on zeros in the arc of +-2cos(m t) + lower-order terms with sup H."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if H < 1:
        raise ValueError(f"H must be >= 1, got {H}")
    return m * arc.length / math.pi + (8 / math.pi) * math.sqrt(2 * m * _log(H, log_base))


def lemma33(k: int, arc: Arc, log_base: float = math.e) -> float:
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    n = 1 << k
    return n * arc.length / math.pi + (8 / math.pi) * _radical(n, log_base)


def lemma34(k: int, arc: Arc, log_base: float = math.e) -> float:
    # The radical keeps the full n, as printed, not n/4.
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    n = 1 << k
    return n * arc.length / (4 * math.pi) + (4 / math.pi) * _radical(n, log_base)


def theorem11(n: int, H: float, arc: Arc | None = None, constant: str = "sound8pi",
              log_base: float = math.e) -> float:
    """Allowed |N(I,P) - n|I|/(2 pi)| for a monic degree-n polynomial with H(P) = H.

    The arc does not enter the bound; it is accepted for symmetry with the
    other calculators.
    """
    if H < 1:
        raise ValueError(f"H must be >= 1, got {H}")
    try:
        c = CONSTANTS[constant]
    except KeyError:
        raise ValueError(f"constant must be one of {sorted(CONSTANTS)}") from None
    return c * math.sqrt(n * _log(H, log_base))


def report(kind: str, k_or_m: int, arc: Arc, H: float | None = None,
           log_base: float = math.e) -> BoundReport:
    """Uniform BoundReport for any bound kind (lower is -inf for one-sided bounds)."""
    if kind == "theorem21":
        return theorem21(k_or_m, arc, log_base)
    if kind == "lemma32":
        upper = lemma32(k_or_m, H, arc, log_base)
    elif kind == "lemma33":
        upper = lemma33(k_or_m, arc, log_base)
    elif kind == "lemma34":
        upper = lemma34(k_or_m, arc, log_base)
    elif kind in ("theorem11_classic", "theorem11_sound"):
        const = "classic16" if kind.endswith("classic") else "sound8pi"
        width = theorem11(k_or_m, H, arc, const, log_base)
        centre = k_or_m * arc.length / (2 * math.pi)
        return BoundReport(kind, k_or_m, arc, centre - width, centre + width, log_base)
    else:
        raise ValueError(f"unknown bound kind {kind!r}")
    return BoundReport(kind, k_or_m, arc, -math.inf, upper, log_base)
