"""Rules engine for the two-player Zeckendorf game.

Positions are multisets of Fibonacci summands (indexing F_1=1, F_2=2,
F_3=3, F_4=5, ...) stored as a dense multiplicity vector over indices
1..ell(n), where ell(n) is the index of the largest Fibonacci number <= n.
The four legal rewrites conserve the total sum n and strictly decrease the
monovariant sum(count[i] * sqrt(i)), so every game terminates at the unique
Zeckendorf decomposition of n.

All state values are immutable; every operation here is a pure function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional


class RuleViolation(ValueError):
    """An attempted move is not legal in the given state."""


class MoveKind(str, Enum):
    MERGE_ONES = "merge_ones"    # F_1 + F_1 -> F_2
    SPLIT_TWOS = "split_twos"    # F_2 + F_2 -> F_1 + F_3
    SPLIT = "split"              # F_i + F_i -> F_{i-2} + F_{i+1}, i >= 3
    COMBINE = "combine"          # F_i + F_{i+1} -> F_{i+2}, i >= 1


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    index: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind is MoveKind.SPLIT:
            if self.index is None or self.index < 3:
                raise ValueError("split requires an index >= 3")
        elif self.kind is MoveKind.COMBINE:
            if self.index is None or self.index < 1:
                raise ValueError("combine requires an index >= 1")
        elif self.index is not None:
            raise ValueError(f"{self.kind.value} takes no index")

    def to_json(self) -> dict:
        if self.index is None:
            return {"kind": self.kind.value}
        return {"kind": self.kind.value, "index": self.index}

    @classmethod
    def from_json(cls, obj: dict) -> "Move":
        return cls(MoveKind(obj["kind"]), obj.get("index"))

    def __str__(self) -> str:
        if self.index is None:
            return self.kind.value
        return f"{self.kind.value}({self.index})"


# Convenience constructors; the parameterless moves are singletons in spirit.
MERGE_ONES = Move(MoveKind.MERGE_ONES)
SPLIT_TWOS = Move(MoveKind.SPLIT_TWOS)


def split(i: int) -> Move:
    return Move(MoveKind.SPLIT, i)


def combine(i: int) -> Move:
    return Move(MoveKind.COMBINE, i)


@dataclass(frozen=True)
class FibTable:
    """Fibonacci values F_1..F_{ell+1} for a given n, with F_ell <= n < F_{ell+1}."""

    values: tuple[int, ...]
    ell: int

    def fib(self, i: int) -> int:
        return self.values[i - 1]


def fib_table(n: int) -> FibTable:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    values = [1, 2]
    while values[-1] <= n:
        values.append(values[-1] + values[-2])
    # values[-1] is now the first Fibonacci number > n
    return FibTable(tuple(values), len(values) - 1)


@dataclass(frozen=True)
class GameState:
    """A game position: multiplicities of F_1..F_ell summing to n."""

    n: int
    counts: tuple[int, ...]  # counts[i - 1] is the multiplicity of F_i

    def count(self, i: int) -> int:
        return self.counts[i - 1]

    @property
    def ell(self) -> int:
        return len(self.counts)

    def populated(self) -> Iterator[int]:
        """Indices i with count(i) > 0, ascending."""
        for i, c in enumerate(self.counts, start=1):
            if c > 0:
                yield i

    def to_json(self) -> dict:
        return {"n": self.n, "counts": list(self.counts)}

    @classmethod
    def from_json(cls, obj: dict) -> "GameState":
        state = cls(obj["n"], tuple(obj["counts"]))
        validate_state(state)
        return state

    def __str__(self) -> str:
        table = fib_table(self.n)
        parts = [
            f"{table.fib(i)}^{c}" if c > 1 else f"{table.fib(i)}"
            for i, c in enumerate(self.counts, start=1)
            if c > 0
        ]
        return "{" + " ^ ".join(parts) + "}" if parts else "{}"


def validate_state(state: GameState) -> None:
    table = fib_table(state.n)
    if len(state.counts) != table.ell:
        raise ValueError(
            f"counts must cover indices 1..{table.ell} for n={state.n}"
        )
    if any(c < 0 for c in state.counts):
        raise ValueError("negative multiplicity")
    total = sum(c * table.fib(i) for i, c in enumerate(state.counts, start=1))
    if total != state.n:
        raise ValueError(f"summands total {total}, expected {state.n}")


def initial_state(n: int) -> GameState:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    ell = fib_table(n).ell
    counts = [0] * ell
    counts[0] = n
    return GameState(n, tuple(counts))


def legal_moves(state: GameState) -> list[Move]:
    """All legal moves, in the fixed enumeration order:
    merge_ones, split_twos, split ascending, combine ascending."""
    counts = state.counts
    ell = len(counts)
    moves: list[Move] = []
    if counts[0] >= 2:
        moves.append(MERGE_ONES)
    if ell >= 2 and counts[1] >= 2:
        moves.append(SPLIT_TWOS)
    for i in range(3, ell + 1):
        if counts[i - 1] >= 2:
            moves.append(split(i))
    for i in range(1, ell):
        if counts[i - 1] >= 1 and counts[i] >= 1:
            moves.append(combine(i))
    return moves


def is_terminal(state: GameState) -> bool:
    counts = state.counts
    if any(c >= 2 for c in counts):
        return False
    return not any(
        counts[i] and counts[i + 1] for i in range(len(counts) - 1)
    )


def apply_move(state: GameState, move: Move) -> GameState:
    counts = list(state.counts)
    ell = len(counts)
    kind = move.kind
    if kind is MoveKind.MERGE_ONES:
        if counts[0] < 2:
            raise RuleViolation(f"merge_ones needs two 1s in {state}")
        counts[0] -= 2
        counts[1] += 1
    elif kind is MoveKind.SPLIT_TWOS:
        if ell < 2 or counts[1] < 2:
            raise RuleViolation(f"split_twos needs two 2s in {state}")
        counts[1] -= 2
        counts[0] += 1
        counts[2] += 1
    elif kind is MoveKind.SPLIT:
        i = move.index
        if i > ell or counts[i - 1] < 2:
            raise RuleViolation(f"split({i}) needs two copies of F_{i} in {state}")
        # i = ell is impossible from a valid state: it would populate
        # index ell+1 with F_{ell+1} > n, violating the sum invariant.
        counts[i - 1] -= 2
        counts[i - 3] += 1
        counts[i] += 1
    elif kind is MoveKind.COMBINE:
        i = move.index
        if i + 1 > ell or counts[i - 1] < 1 or counts[i] < 1:
            raise RuleViolation(f"combine({i}) needs F_{i} and F_{i + 1} in {state}")
        counts[i - 1] -= 1
        counts[i] -= 1
        counts[i + 1] += 1
    else:  # pragma: no cover
        raise RuleViolation(f"unknown move kind {kind}")
    return GameState(state.n, tuple(counts))


def monovariant(state: GameState) -> float:
    return sum(
        c * math.sqrt(i) for i, c in enumerate(state.counts, start=1) if c
    )


def monovariant_delta(move: Move) -> float:
    """Exact change in the monovariant caused by one move (always negative)."""
    kind = move.kind
    if kind is MoveKind.MERGE_ONES:
        return -2.0 + math.sqrt(2)
    if kind is MoveKind.SPLIT_TWOS:
        return -2.0 * math.sqrt(2) + 1.0 + math.sqrt(3)
    if kind is MoveKind.SPLIT:
        i = move.index
        return -2.0 * math.sqrt(i) + math.sqrt(i - 2) + math.sqrt(i + 1)
    i = move.index
    return -math.sqrt(i) - math.sqrt(i + 1) + math.sqrt(i + 2)


def canonical_key(state: GameState) -> tuple[int, ...]:
    """Deterministic, injective key for memoization (n is fixed per search)."""
    return state.counts


@dataclass(frozen=True)
class Decomposition:
    """The Zeckendorf decomposition: distinct, non-adjacent Fibonacci indices."""

    indices: tuple[int, ...]

    @property
    def z(self) -> int:
        return len(self.indices)


def zeckendorf(n: int) -> Decomposition:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    table = fib_table(n)
    indices = []
    remainder = n
    i = table.ell
    while remainder > 0:
        while table.fib(i) > remainder:
            i -= 1
        indices.append(i)
        remainder -= table.fib(i)
        i -= 1  # greedy choice never leaves room for the adjacent index
    return Decomposition(tuple(reversed(indices)))


def zeckendorf_state(n: int) -> GameState:
    """The terminal position of every game on n."""
    ell = fib_table(n).ell
    counts = [0] * ell
    for i in zeckendorf(n).indices:
        counts[i - 1] = 1
    return GameState(n, tuple(counts))
