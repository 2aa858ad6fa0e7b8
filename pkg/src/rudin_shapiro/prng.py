"""Portable arc sampler.

The generator is the 64-bit linear congruential generator

    x <- (6364136223846793005 * x + 1442695040888963407) mod 2^64

seeded with x_0 = seed mod 2^64.  A uniform draw in [0, 1) is the top 53
bits of the new state divided by 2^53.  Any language with 64-bit unsigned
arithmetic reproduces the same stream.
"""

from __future__ import annotations

import math

from .zeros import Arc

MULTIPLIER = 6364136223846793005
INCREMENT = 1442695040888963407
MASK = (1 << 64) - 1


class LCG64:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next_u64(self) -> int:
        self.state = (MULTIPLIER * self.state + INCREMENT) & MASK
        return self.state

    def uniform(self) -> float:
        return (self.next_u64() >> 11) / float(1 << 53)


def random_arcs(count: int, seed: int, min_length: float = 0.0) -> list[Arc]:
    """``count`` arcs with both ends uniform on [0, 2 pi], sorted, and length >= min_length.

    Draws that are too short are rejected and redrawn.
    """
    if min_length > 2 * math.pi:
        raise ValueError("min_length exceeds the full circle")
    gen = LCG64(seed)
    arcs = []
    while len(arcs) < count:
        a = 2 * math.pi * gen.uniform()
        b = 2 * math.pi * gen.uniform()
        lo, hi = min(a, b), max(a, b)
        if hi - lo >= min_length:
            arcs.append(Arc(lo, hi))
    return arcs


def arcs_for_level(k: int, count: int, seed: int) -> list[Arc]:
    """Seeded arcs long enough for the level-k construction (|I| >= 4 pi / 2^k)."""
    min_length = 4 * math.pi / (1 << k) if k >= 2 else 0.0
    return random_arcs(count, seed, min(min_length, 2 * math.pi))
