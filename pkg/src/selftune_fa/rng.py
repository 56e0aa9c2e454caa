"""Seedable random streams with a fixed, reproducible draw discipline.

The engine's stochastic behaviour is fully determined by a 64-bit seed.
Replicate runs derive their own seeds through :func:`derive_seed`, so a
batch of runs is reproducible regardless of execution order.

The generator is xoshiro256** seeded through a SplitMix64 expansion;
normal deviates use the Box-Muller transform with the usual pair cache.
The compiled engine implements the identical state transitions, so both
backends produce the same stream for the same seed.
"""

from __future__ import annotations

import math

_MASK64 = 0xFFFFFFFFFFFFFFFF
_GOLDEN = 0x9E3779B97F4A7C15
_TWO_PI = 6.283185307179586
_INV_2_53 = 1.0 / 9007199254740992.0  # 2**-53


def _splitmix64(state: int) -> tuple[int, int]:
    """One SplitMix64 step: returns (new_state, output)."""
    state = (state + _GOLDEN) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def derive_seed(master: int, index: int) -> int:
    """Derive the seed for logical sub-run `index` under `master`.

    Pure function of (master, index): derived streams are independent
    and insensitive to the order in which sub-runs execute.
    """
    if index < 0:
        raise ValueError(f"index must be non-negative, got {index}")
    base = (master + (index + 1) * _GOLDEN) & _MASK64
    _, out = _splitmix64(base)
    return out


class RngStream:
    """Deterministic stream of uniforms on [0, 1) and standard normals."""

    __slots__ = ("_s0", "_s1", "_s2", "_s3", "_cached_normal")

    def __init__(self, seed: int):
        state = seed & _MASK64
        state, self._s0 = _splitmix64(state)
        state, self._s1 = _splitmix64(state)
        state, self._s2 = _splitmix64(state)
        state, self._s3 = _splitmix64(state)
        self._cached_normal: float | None = None

    def next_raw(self) -> int:
        """Next 64-bit output of xoshiro256**."""
        s0, s1, s2, s3 = self._s0, self._s1, self._s2, self._s3
        x = (s1 * 5) & _MASK64
        result = (((x << 7) | (x >> 57)) & _MASK64) * 9 & _MASK64
        t = (s1 << 17) & _MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = ((s3 << 45) | (s3 >> 19)) & _MASK64
        self._s0, self._s1, self._s2, self._s3 = s0, s1, s2, s3
        return result

    def uniform(self) -> float:
        """Uniform double on [0, 1) with 53 random bits."""
        return (self.next_raw() >> 11) * _INV_2_53

    def normal(self) -> float:
        """Standard normal deviate (Box-Muller, pair cached)."""
        cached = self._cached_normal
        if cached is not None:
            self._cached_normal = None
            return cached
        u1 = self.uniform()
        u2 = self.uniform()
        r = math.sqrt(-2.0 * math.log(1.0 - u1))
        angle = _TWO_PI * u2
        self._cached_normal = r * math.sin(angle)
        return r * math.cos(angle)
