"""Portable deterministic random stream (SplitMix64).

A tiny named generator is used instead of the stdlib Mersenne Twister so
that the compiled playout kernel, the pure-Python kernel, and any future
port can reproduce the exact same games from the same seed. Per-game
streams are derived from (seed, game_index) by a fixed mixing function,
so simulation results never depend on worker scheduling.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(x: int) -> int:
    """SplitMix64 output finalizer; a 64-bit bijective mixer."""
    x &= MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def derive_stream_seed(seed: int, game_index: int) -> int:
    """Seed for game number `game_index` of a run seeded with `seed`."""
    return mix64((seed & MASK64) ^ mix64((game_index * GOLDEN) & MASK64))


class SplitMix64:
    """64-bit PRNG with a single word of state."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def next_below(self, bound: int) -> int:
        """Uniform draw in [0, bound); consumes exactly one u64.

        Plain modulo reduction: the bias for bound values this small
        (legal-move counts, at most a few dozen) is below 2^-58.
        """
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound
