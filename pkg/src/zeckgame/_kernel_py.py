"""Pure-Python playout kernel; reference semantics for the compiled one.

Plays uniform-random games to termination and returns their lengths.
Move enumeration order and random-draw discipline (one SplitMix64 draw
per move, modulo the number of legal moves) must match `core.legal_moves`
and `rng.SplitMix64.next_below` exactly: the compiled kernel, this
fallback, and a move-by-move playout through `strategies.play_game` all
produce identical games from identical seeds.
"""

from __future__ import annotations

from .core import fib_table
from .rng import GOLDEN, MASK64, derive_stream_seed, mix64


def random_playout_length(n: int, stream_seed: int) -> int:
    """Number of moves in one uniform-random game on n."""
    ell = fib_table(n).ell
    counts = [0] * (ell + 1)  # 1-based; index 0 unused
    counts[1] = n
    state = stream_seed & MASK64
    length = 0
    moves: list[int] = []  # packed: kind * 64 + index
    while True:
        moves.clear()
        if counts[1] >= 2:
            moves.append(0)  # merge_ones
        if ell >= 2 and counts[2] >= 2:
            moves.append(64)  # split_twos
        for i in range(3, ell + 1):
            if counts[i] >= 2:
                moves.append(128 + i)  # split(i)
        for i in range(1, ell):
            if counts[i] >= 1 and counts[i + 1] >= 1:
                moves.append(192 + i)  # combine(i)
        if not moves:
            return length
        state = (state + GOLDEN) & MASK64
        packed = moves[mix64(state) % len(moves)]
        kind, i = packed >> 6, packed & 63
        if kind == 0:
            counts[1] -= 2
            counts[2] += 1
        elif kind == 1:
            counts[2] -= 2
            counts[1] += 1
            counts[3] += 1
        elif kind == 2:
            counts[i] -= 2
            counts[i - 2] += 1
            counts[i + 1] += 1
        else:
            counts[i] -= 1
            counts[i + 1] -= 1
            counts[i + 2] += 1
        length += 1


def random_playout_lengths(n: int, seed: int, start: int, count: int) -> list[int]:
    """Lengths of games number start..start+count-1 of a run seeded with seed."""
    return [
        random_playout_length(n, derive_stream_seed(seed, g))
        for g in range(start, start + count)
    ]
