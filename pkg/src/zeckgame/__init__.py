"""The two-player Zeckendorf game: rules engine, exhaustive solver,
Monte Carlo simulator, and HTTP play service."""

from .core import (
    Decomposition,
    FibTable,
    GameState,
    Move,
    MoveKind,
    RuleViolation,
    apply_move,
    canonical_key,
    fib_table,
    initial_state,
    is_terminal,
    legal_moves,
    monovariant,
    zeckendorf,
)
from .solver import BoundsReport, SolveReport, bounds_report, export_tree, \
    extreme_lengths, solve, winning_line
from .simulator import GaussianFit, SimStats, average_scaling, gaussian_fit, \
    simulate
from .strategies import GameRecord, Policy, Winner, make_policy, play_game

__all__ = [
    "Decomposition", "FibTable", "GameState", "Move", "MoveKind",
    "RuleViolation", "apply_move", "canonical_key", "fib_table",
    "initial_state", "is_terminal", "legal_moves", "monovariant",
    "zeckendorf", "BoundsReport", "SolveReport", "bounds_report",
    "export_tree", "extreme_lengths", "solve", "winning_line",
    "GaussianFit", "SimStats", "average_scaling", "gaussian_fit",
    "simulate", "GameRecord", "Policy", "Winner", "make_policy", "play_game",
]

__version__ = "0.1.0"
