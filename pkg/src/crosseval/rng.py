"""Deterministic random number generation shared by both kernel backends.

The compiled Gibbs kernels carry a C implementation of the exact same
splitmix64 stream and derived samplers. Any change here must be mirrored in
``_kernels/_gibbs.pyx`` op-for-op, otherwise the two backends stop producing
bit-identical fits.
"""

from __future__ import annotations

import math

_MASK64 = 0xFFFFFFFFFFFFFFFF
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_TWO_PI = 6.283185307179586
_INV_2_53 = 1.0 / 9007199254740992.0  # 2^-53


def seed_state(seed: int) -> int:
    """Map an arbitrary integer seed onto a nonzero 64-bit stream state."""
    return (seed ^ 0x5DEECE66D) & _MASK64


def next_u64(state: int) -> tuple[int, int]:
    """One splitmix64 step: returns (new_state, output)."""
    state = (state + _GOLDEN) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    z = z ^ (z >> 31)
    return state, z


class DeterministicRng:
    """splitmix64-backed generator with uniform, normal, gamma and beta draws."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed_state(seed)

    def next_double(self) -> float:
        """Uniform double in [0, 1) with 53 random bits."""
        self.state, z = next_u64(self.state)
        return (z >> 11) * _INV_2_53

    def next_normal(self) -> float:
        """Standard normal via basic Box-Muller (one draw per two uniforms)."""
        u1 = self.next_double()
        u2 = self.next_double()
        if u1 <= 0.0:
            u1 = _INV_2_53
        return math.sqrt(-2.0 * math.log(u1)) * math.cos(_TWO_PI * u2)

    def next_gamma(self, shape: float) -> float:
        """Gamma(shape, 1) via Marsaglia-Tsang, with the boost for shape < 1."""
        if shape < 1.0:
            g = self.next_gamma(shape + 1.0)
            u = self.next_double()
            if u <= 0.0:
                u = _INV_2_53
            return g * math.pow(u, 1.0 / shape)
        d = shape - 1.0 / 3.0
        c = 1.0 / math.sqrt(9.0 * d)
        while True:
            x = self.next_normal()
            v = 1.0 + c * x
            if v <= 0.0:
                continue
            v = v * v * v
            u = self.next_double()
            if u < 1.0 - 0.0331 * (x * x) * (x * x):
                return d * v
            if u <= 0.0:
                u = _INV_2_53
            if math.log(u) < 0.5 * x * x + d * (1.0 - v + math.log(v)):
                return d * v

    def next_beta(self, a: float, b: float) -> float:
        x = self.next_gamma(a)
        y = self.next_gamma(b)
        return x / (x + y)

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle driven by the deterministic stream."""
        for i in range(len(items) - 1, 0, -1):
            j = int(self.next_double() * (i + 1))
            if j > i:  # guard against the r == 1.0-epsilon edge
                j = i
            items[i], items[j] = items[j], items[i]

    def sample_without_replacement(self, n: int, k: int) -> list[int]:
        """k distinct indices drawn from range(n), order of selection."""
        pool = list(range(n))
        picked = []
        for _ in range(k):
            idx = int(self.next_double() * len(pool))
            if idx >= len(pool):
                idx = len(pool) - 1
            picked.append(pool.pop(idx))
        return picked


def derive_seed(*parts: object) -> int:
    """Stable 63-bit seed derived from heterogeneous parts (FNV-1a over repr)."""
    h = 0xCBF29CE484222325
    for part in parts:
        for byte in repr(part).encode("utf-8"):
            h = ((h ^ byte) * 0x100000001B3) & _MASK64
        h = ((h ^ 0x2E) * 0x100000001B3) & _MASK64
    return h >> 1
