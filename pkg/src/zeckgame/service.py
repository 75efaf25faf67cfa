"""HTTP play and analysis service.

Sessions live in memory. Each session serializes its mutations behind a
lock; the engine's reply (when it holds the next seat) is applied inside
the same post_move transaction, so clients never observe a half-turn.
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field
from typing import Literal, Optional

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from .core import (
    GameState,
    Move,
    MoveKind,
    RuleViolation,
    apply_move,
    initial_state,
    is_terminal,
    legal_moves,
    monovariant,
)
from .solver import (
    CapacityError,
    bounds_report,
    export_tree,
    solve,
)
from .simulator import gaussian_fit, simulate, DegenerateStatsError
from .strategies import Policy, Winner, make_policy, winner_for_length


@dataclass
class GameSession:
    id: str
    n: int
    mode: str  # "human_vs_human" | "human_vs_engine"
    state: GameState
    history: list[tuple[int, Move]] = field(default_factory=list)
    engine_seat: Optional[int] = None
    engine_policy: Optional[Policy] = None
    policy_name: Optional[str] = None
    seed: Optional[int] = None
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def mover(self) -> int:
        """Seat to move next: players alternate, Player 1 first."""
        return 1 + len(self.history) % 2

    @property
    def finished(self) -> bool:
        return is_terminal(self.state)

    @property
    def winner(self) -> Optional[Winner]:
        if not self.finished:
            return None
        return winner_for_length(len(self.history))

    def view(self) -> dict:
        return {
            "id": self.id,
            "n": self.n,
            "mode": self.mode,
            "engine_seat": self.engine_seat,
            "policy": self.policy_name,
            "state": self.state.to_json(),
            "legal_moves": [m.to_json() for m in legal_moves(self.state)],
            "history": [
                {"player": player, "move": move.to_json()}
                for player, move in self.history
            ],
            "monovariant": monovariant(self.state),
            "status": "finished" if self.finished else "in_progress",
            "winner": self.winner.value if self.winner else None,
            "to_move": None if self.finished else self.mover,
        }


class CreateGameRequest(BaseModel):
    n: int = Field(ge=2, description="game total; n=1 has no moves")
    mode: Literal["human_vs_human", "human_vs_engine"] = "human_vs_engine"
    policy: Literal["random", "greedy", "longest"] = "random"
    engine_seat: Literal[1, 2] = 2
    seed: int = 0


class MoveRequest(BaseModel):
    kind: Literal["merge_ones", "split_twos", "split", "combine"]
    index: Optional[int] = None


def create_app(
    solve_limit: int = 25,
    export_limit: int = 15,
    simulate_trials_limit: int = 100_000,
) -> FastAPI:
    app = FastAPI(title="Zeckendorf game service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions: dict[str, GameSession] = {}
    sessions_lock = threading.Lock()

    def engine_turn(session: GameSession) -> None:
        while (
            session.mode == "human_vs_engine"
            and not session.finished
            and session.mover == session.engine_seat
        ):
            move = session.engine_policy(session.state)
            session.state = apply_move(session.state, move)
            session.history.append((session.engine_seat, move))
            break  # one engine reply per human move

    @app.post("/games", status_code=201)
    def create_game(req: CreateGameRequest) -> dict:
        session = GameSession(
            id=uuid.uuid4().hex,
            n=req.n,
            mode=req.mode,
            state=initial_state(req.n),
        )
        if req.mode == "human_vs_engine":
            session.engine_seat = req.engine_seat
            session.policy_name = req.policy
            session.seed = req.seed
            session.engine_policy = make_policy(req.policy, seed=req.seed)
        with sessions_lock:
            sessions[session.id] = session
        with session.lock:
            engine_turn(session)
            return session.view()

    def get_session(game_id: str) -> GameSession:
        with sessions_lock:
            session = sessions.get(game_id)
        if session is None:
            raise HTTPException(status_code=404, detail=f"no game {game_id}")
        return session

    @app.get("/games/{game_id}")
    def get_game(game_id: str) -> dict:
        session = get_session(game_id)
        with session.lock:
            return session.view()

    @app.post("/games/{game_id}/moves")
    def post_move(game_id: str, req: MoveRequest) -> dict:
        session = get_session(game_id)
        with session.lock:
            if session.finished:
                raise HTTPException(status_code=409, detail="game is finished")
            if (
                session.mode == "human_vs_engine"
                and session.mover == session.engine_seat
            ):
                raise HTTPException(
                    status_code=409, detail="it is the engine's turn"
                )
            try:
                move = Move(MoveKind(req.kind), req.index)
            except ValueError as exc:
                raise HTTPException(status_code=422, detail=str(exc))
            if move not in legal_moves(session.state):
                raise HTTPException(
                    status_code=422,
                    detail=f"illegal move {move} in state {session.state}",
                )
            mover = session.mover
            session.state = apply_move(session.state, move)
            session.history.append((mover, move))
            engine_turn(session)
            return session.view()

    @app.get("/analysis/solve")
    def analysis_solve(n: int) -> dict:
        try:
            return solve(n, limit=solve_limit).to_json()
        except CapacityError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))

    @app.get("/analysis/bounds")
    def analysis_bounds(n: int) -> dict:
        try:
            return bounds_report(n).to_json()
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))

    @app.get("/analysis/simulate")
    def analysis_simulate(n: int, trials: int = 9999, seed: int = 0) -> dict:
        if trials > simulate_trials_limit:
            raise HTTPException(
                status_code=422,
                detail=f"trials limited to {simulate_trials_limit}",
            )
        try:
            stats = simulate(n, trials, seed)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        doc = stats.to_json()
        try:
            doc["gaussian_fit"] = gaussian_fit(stats).to_json()
        except DegenerateStatsError:
            doc["gaussian_fit"] = None
        return doc

    @app.get("/analysis/tree")
    def analysis_tree(n: int, format: str = "json") -> dict:
        try:
            doc = export_tree(n, fmt=format, limit=export_limit)
        except CapacityError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return {"n": n, "format": format, "document": doc}

    return app


app = create_app()
