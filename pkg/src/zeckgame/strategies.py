"""Move-selection policies and full-game playouts.

Three policies:
  * greedy_largest  — always acts on the largest summand; realizes the
    sharp shortest game of n - Z(n) moves.
  * longest         — the conjectured longest-game ordering: merge ones,
    split twos, splits ascending, combines ascending.
  * random          — uniform over the legal moves, seeded SplitMix64.

Players alternate starting with Player 1; whoever makes the last move
wins. The n=1 game has no moves and gets the distinguished NO_MOVES
outcome instead of a winner.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from .core import (
    GameState,
    MERGE_ONES,
    Move,
    SPLIT_TWOS,
    apply_move,
    combine,
    initial_state,
    is_terminal,
    legal_moves,
    split,
)
from .rng import SplitMix64, derive_stream_seed


class Winner(str, Enum):
    PLAYER1 = "player1"
    PLAYER2 = "player2"
    NO_MOVES = "no_moves"  # n=1: the game is over before anyone moves


def winner_for_length(length: int) -> Winner:
    if length == 0:
        return Winner.NO_MOVES
    return Winner.PLAYER1 if length % 2 == 1 else Winner.PLAYER2


@dataclass(frozen=True)
class GameRecord:
    n: int
    policy: str
    moves: tuple[Move, ...]

    @property
    def length(self) -> int:
        return len(self.moves)

    @property
    def winner(self) -> Winner:
        return winner_for_length(self.length)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "policy": self.policy,
            "moves": [m.to_json() for m in self.moves],
            "length": self.length,
            "winner": self.winner.value,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "GameRecord":
        return cls(
            obj["n"], obj["policy"], tuple(Move.from_json(m) for m in obj["moves"])
        )


def greedy_largest_move(state: GameState) -> Move:
    """The move of the deterministic shortest game.

    Scan populated indices from the largest down; at the first index with
    an applicable move, prefer combining with the summand below, then the
    one above, then the doubling move for that index. Combines reduce the
    term count by one, which is what makes the n - Z(n) length exact.
    """
    counts = state.counts
    ell = len(counts)
    for i in range(ell, 0, -1):
        if counts[i - 1] == 0:
            continue
        if i >= 2 and counts[i - 2] >= 1:
            return combine(i - 1)
        if i < ell and counts[i] >= 1:
            return combine(i)
        if counts[i - 1] >= 2:
            if i == 1:
                return MERGE_ONES
            if i == 2:
                return SPLIT_TWOS
            return split(i)
    raise ValueError(f"no legal move in terminal state {state}")


def conjectured_longest_move(state: GameState) -> Move:
    """First move in the fixed enumeration order (the conjectured
    longest-game ordering coincides with it)."""
    moves = legal_moves(state)
    if not moves:
        raise ValueError(f"no legal move in terminal state {state}")
    return moves[0]


def random_move(state: GameState, rng: SplitMix64) -> Move:
    moves = legal_moves(state)
    if not moves:
        raise ValueError(f"no legal move in terminal state {state}")
    return moves[rng.next_below(len(moves))]


@dataclass(frozen=True)
class Policy:
    """A named move chooser. `chooser` maps a non-terminal state to a move."""

    name: str
    chooser: Callable[[GameState], Move]

    def __call__(self, state: GameState) -> Move:
        return self.chooser(state)


def greedy_policy() -> Policy:
    return Policy("greedy", greedy_largest_move)


def longest_policy() -> Policy:
    return Policy("longest", conjectured_longest_move)


def random_policy(seed: int, game_index: int = 0) -> Policy:
    """Uniform-random policy on the (seed, game_index) stream.

    The stream derivation matches the simulator's, so a playout here
    reproduces game number `game_index` of a simulation run move for move.
    """
    rng = SplitMix64(derive_stream_seed(seed, game_index))
    return Policy(
        f"random(seed={seed},game={game_index})",
        lambda state: random_move(state, rng),
    )


def make_policy(name: str, seed: int = 0, game_index: int = 0) -> Policy:
    if name == "greedy":
        return greedy_policy()
    if name == "longest":
        return longest_policy()
    if name == "random":
        return random_policy(seed, game_index)
    raise ValueError(f"unknown policy {name!r}")


POLICY_NAMES = ("greedy", "longest", "random")


def play_game(
    n: int,
    policy: Policy,
    on_move: Optional[Callable[[GameState, Move, GameState], None]] = None,
) -> GameRecord:
    """Drive a policy from {1^n} to the Zeckendorf decomposition.

    `on_move(before, move, after)` is called per move when given; the
    invariant test suite uses it to check every transition.
    """
    state = initial_state(n)
    moves: list[Move] = []
    while not is_terminal(state):
        move = policy(state)
        after = apply_move(state, move)
        if on_move is not None:
            on_move(state, move, after)
        moves.append(move)
        state = after
    return GameRecord(n, policy.name, tuple(moves))
