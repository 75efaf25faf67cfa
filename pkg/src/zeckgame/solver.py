"""Exhaustive analysis of the game DAG rooted at {1^n}.

The reachable positions form a DAG (the monovariant strictly decreases
along every edge), so a memoized depth-first pass computes, per position:
whether the player to move wins under optimal play (normal play: the side
with no move loses), exact shortest/longest distances to the terminal
position, and which remaining-move parities are achievable. Longest path
by memoized recursion is valid only because the graph is acyclic.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import lru_cache
from threading import Lock

from .core import (
    GameState,
    Move,
    apply_move,
    canonical_key,
    fib_table,
    initial_state,
    legal_moves,
    zeckendorf,
)
from .strategies import Winner

DEFAULT_SOLVE_LIMIT = 25
DEFAULT_EXPORT_LIMIT = 15

PHI = (1 + math.sqrt(5)) / 2


class CapacityError(ValueError):
    """n exceeds the configured exhaustive-search limit."""

    def __init__(self, n: int, limit: int, what: str):
        self.n = n
        self.limit = limit
        super().__init__(f"{what} supports n <= {limit}, got {n}")


@dataclass(frozen=True)
class NodeInfo:
    """Optimal-play facts about one position."""

    mover_wins: bool        # player to move wins with optimal play
    min_moves: int          # shortest completion from here
    max_moves: int          # longest completion from here
    even_reachable: bool    # some completion uses an even number of moves
    odd_reachable: bool


@dataclass
class GameGraph:
    """Memoized exhaustive search over the reachable positions for one n."""

    n: int
    _table: dict[tuple[int, ...], NodeInfo] = field(default_factory=dict)
    _lock: Lock = field(default_factory=Lock)

    def info(self, state: GameState) -> NodeInfo:
        key = canonical_key(state)
        hit = self._table.get(key)
        if hit is not None:
            return hit
        # Iterative DFS: recursion depth can reach the max game length.
        stack: list[tuple] = [(state, key, None)]
        while stack:
            cur, cur_key, children = stack.pop()
            if cur_key in self._table:
                continue
            if children is None:
                kids = [apply_move(cur, m) for m in legal_moves(cur)]
                pending = [
                    k for k in kids if canonical_key(k) not in self._table
                ]
                if pending:
                    stack.append((cur, cur_key, kids))
                    for k in pending:
                        stack.append((k, canonical_key(k), None))
                    continue
                children = kids
            info = self._combine([self._table[canonical_key(k)] for k in children])
            with self._lock:
                self._table.setdefault(cur_key, info)
        return self._table[key]

    @staticmethod
    def _combine(child_infos: list[NodeInfo]) -> NodeInfo:
        if not child_infos:
            return NodeInfo(
                mover_wins=False,
                min_moves=0,
                max_moves=0,
                even_reachable=True,
                odd_reachable=False,
            )
        return NodeInfo(
            mover_wins=any(not c.mover_wins for c in child_infos),
            min_moves=1 + min(c.min_moves for c in child_infos),
            max_moves=1 + max(c.max_moves for c in child_infos),
            even_reachable=any(c.odd_reachable for c in child_infos),
            odd_reachable=any(c.even_reachable for c in child_infos),
        )

    def reachable_states(self) -> int:
        self.info(initial_state(self.n))
        return len(self._table)


@dataclass(frozen=True)
class SolveReport:
    n: int
    winner: Winner
    reachable_states: int
    min_length: int
    max_length: int
    parities: frozenset[str]  # subset of {"odd", "even"}

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "winner": self.winner.value,
            "reachable_states": self.reachable_states,
            "min_length": self.min_length,
            "max_length": self.max_length,
            "parities": sorted(self.parities),
        }


@lru_cache(maxsize=64)
def _graph(n: int) -> GameGraph:
    graph = GameGraph(n)
    graph.info(initial_state(n))
    return graph


def solve(n: int, limit: int = DEFAULT_SOLVE_LIMIT) -> SolveReport:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if n > limit:
        raise CapacityError(n, limit, "exhaustive solve")
    graph = _graph(n)
    root = initial_state(n)
    info = graph.info(root)
    if info.min_moves == 0:
        winner = Winner.NO_MOVES
    elif info.mover_wins:
        winner = Winner.PLAYER1
    else:
        winner = Winner.PLAYER2
    parities = set()
    if info.odd_reachable:
        parities.add("odd")
    if info.even_reachable:
        parities.add("even")
    if info.min_moves == 0:
        parities = {"even"}  # the empty game; kept explicit for n=1
    return SolveReport(
        n=n,
        winner=winner,
        reachable_states=graph.reachable_states(),
        min_length=info.min_moves,
        max_length=info.max_moves,
        parities=frozenset(parities),
    )


def extreme_lengths(n: int, limit: int = DEFAULT_SOLVE_LIMIT) -> tuple[int, int]:
    report = solve(n, limit)
    return report.min_length, report.max_length


def winning_line(n: int, limit: int = DEFAULT_SOLVE_LIMIT) -> list[Move]:
    """One optimal principal variation from {1^n}.

    At each position the mover takes the first move (fixed enumeration
    order) that leads to a position lost for the opponent; if none exists
    the mover is lost anyway and takes the first legal move.
    """
    if n < 2:
        raise ValueError("n=1 has no moves; no line exists")
    if n > limit:
        raise CapacityError(n, limit, "exhaustive solve")
    graph = _graph(n)
    state = initial_state(n)
    line: list[Move] = []
    while True:
        moves = legal_moves(state)
        if not moves:
            return line
        chosen = moves[0]
        for move in moves:
            child = apply_move(state, move)
            if not graph.info(child).mover_wins:
                chosen = move
                break
        line.append(chosen)
        state = apply_move(state, chosen)


@dataclass(frozen=True)
class BoundsReport:
    n: int
    lower: int       # n - Z(n), the sharp shortest-game length
    ell: int         # index of the largest Fibonacci number <= n
    upper: int       # ell * n
    log_upper: float  # log_phi(sqrt(5) n + 1/2) * n, via Binet

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "lower": self.lower,
            "ell": self.ell,
            "upper": self.upper,
            "log_upper": self.log_upper,
        }


def bounds_report(n: int) -> BoundsReport:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    ell = fib_table(n).ell
    return BoundsReport(
        n=n,
        lower=n - zeckendorf(n).z,
        ell=ell,
        upper=ell * n,
        log_upper=math.log(math.sqrt(5) * n + 0.5, PHI) * n,
    )


def _enumerate_graph(
    n: int,
) -> tuple[list[GameState], dict[tuple[int, ...], int], list[tuple[int, int, Move]]]:
    """Reachable states in deterministic DFS-preorder plus the edge list."""
    root = initial_state(n)
    order: list[GameState] = []
    index: dict[tuple[int, ...], int] = {}
    edges: list[tuple[int, int, Move]] = []
    stack = [root]
    while stack:
        state = stack.pop()
        key = canonical_key(state)
        if key in index:
            continue
        index[key] = len(order)
        order.append(state)
        # push children reversed so they are visited in enumeration order
        for move in reversed(legal_moves(state)):
            stack.append(apply_move(state, move))
    for src in order:
        for move in legal_moves(src):
            edges.append(
                (index[canonical_key(src)],
                 index[canonical_key(apply_move(src, move))],
                 move)
            )
    return order, index, edges


def export_tree(n: int, fmt: str = "dot", limit: int = DEFAULT_EXPORT_LIMIT) -> str:
    """Full game DAG as DOT or JSON text, winner-annotated, with the
    edges of one optimal line marked."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if n > limit:
        raise CapacityError(n, limit, "game-graph export")
    if fmt not in ("dot", "json"):
        raise ValueError(f"format must be 'dot' or 'json', got {fmt!r}")
    graph = _graph(n)
    order, index, edges = _enumerate_graph(n)

    def node_winner(state: GameState, depth_parity_free: NodeInfo) -> str:
        # winner of the subgame starting here, mover first
        info = depth_parity_free
        if info.min_moves == 0 and info.max_moves == 0:
            return "terminal"
        return "mover" if info.mover_wins else "opponent"

    line_edges: set[tuple[int, int]] = set()
    if n >= 2:
        state = initial_state(n)
        for move in winning_line(n, limit=max(limit, n)):
            nxt = apply_move(state, move)
            line_edges.add((index[canonical_key(state)], index[canonical_key(nxt)]))
            state = nxt

    infos = [graph.info(s) for s in order]
    if fmt == "json":
        return json.dumps(
            {
                "n": n,
                "nodes": [
                    {
                        "id": i,
                        "label": str(s),
                        "counts": list(s.counts),
                        "winner": node_winner(s, infos[i]),
                    }
                    for i, s in enumerate(order)
                ],
                "edges": [
                    {
                        "source": a,
                        "target": b,
                        "move": m.to_json(),
                        "on_winning_line": (a, b) in line_edges,
                    }
                    for a, b, m in edges
                ],
            },
            indent=2,
        )
    lines = [f'digraph zeckendorf_{n} {{', "  rankdir=TB;"]
    for i, s in enumerate(order):
        shape = "doublecircle" if infos[i].max_moves == 0 else "box"
        lines.append(
            f'  s{i} [label="{s}" shape={shape} '
            f'tooltip="{node_winner(s, infos[i])}"];'
        )
    for a, b, m in edges:
        attrs = f'label="{m}"'
        if (a, b) in line_edges:
            attrs += " color=green penwidth=2"
        lines.append(f"  s{a} -> s{b} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
