"""SplitMix64, used as a counter-based generator.

Output ``k`` (k = 0, 1, 2, ...) of the stream with seed ``s`` is
``mix64(s + (k + 1) * GAMMA mod 2**64)``.  Bounded integers use rejection
on the raw 64-bit output so the stream is unbiased and easy to reproduce in
any language with 64-bit unsigned arithmetic.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed: int):
        self.seed = seed & MASK64
        self.counter = 0

    def next_u64(self) -> int:
        self.counter += 1
        return mix64(self.seed + self.counter * GAMMA)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]."""
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        span = hi - lo + 1
        limit = (1 << 64) - (1 << 64) % span
        while True:
            x = self.next_u64()
            if x < limit:
                return lo + x % span


def derive_seed(seed: int, *path: int) -> int:
    """Seed for a sub-stream, e.g. ``derive_seed(seed, dim, index)`` in fuzz runs."""
    s = seed & MASK64
    for p in path:
        s = mix64(s ^ mix64((p & MASK64) + GAMMA))
    return s
