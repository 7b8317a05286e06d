"""Reproducible random streams for model processes.

The generator is xoshiro256** (Blackman and Vigna's reference algorithm),
seeded through splitmix64.  States are immutable so they can live inside
process p-states: every draw returns the value and the next state.

Each process gets its own stream derived from the root seed and the process
name, so the order in which processes act never reshuffles their draws.
"""

from __future__ import annotations

import math
from typing import NamedTuple

MASK = (1 << 64) - 1


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & MASK


def splitmix64(x: int) -> tuple[int, int]:
    """Return ``(output, next_state)``."""
    x = (x + 0x9E3779B97F4A7C15) & MASK
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31), x


def fnv1a64(data: bytes) -> int:
    h = 0xCBF29CE484222325
    for byte in data:
        h = ((h ^ byte) * 0x100000001B3) & MASK
    return h


class Xoshiro256(NamedTuple):
    s0: int
    s1: int
    s2: int
    s3: int

    @classmethod
    def from_seed(cls, seed: int) -> Xoshiro256:
        if not 0 <= seed <= MASK:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
        words = []
        x = seed
        for _ in range(4):
            out, x = splitmix64(x)
            words.append(out)
        return cls(*words)

    def next_u64(self) -> tuple[int, Xoshiro256]:
        s0, s1, s2, s3 = self
        result = (_rotl((s1 * 5) & MASK, 7) * 9) & MASK
        t = (s1 << 17) & MASK
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl(s3, 45)
        return result, Xoshiro256(s0, s1, s2, s3)

    def uniform(self) -> tuple[float, Xoshiro256]:
        """A double in [0, 1) from the top 53 bits."""
        x, nxt = self.next_u64()
        return (x >> 11) * 2.0**-53, nxt

    def exponential(self, rate: float) -> tuple[float, Xoshiro256]:
        """Inverse-CDF exponential variate with the given rate."""
        u, nxt = self.uniform()
        return -math.log1p(-u) / rate, nxt


def stream(seed: int, name: str) -> Xoshiro256:
    """The stream owned by process ``name`` under root seed ``seed``."""
    return Xoshiro256.from_seed(seed ^ fnv1a64(name.encode("utf-8")))
