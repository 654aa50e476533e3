"""HTTP/JSON service exposing decompositions, openings and live game sessions.

Sessions live in memory and are ephemeral by design.  Each session's moves
are serialized under a per-session lock; read-only artifacts (graphs,
per-n decompositions) are immutable and shared freely.
"""

from __future__ import annotations

import logging
import os
import threading
import time
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response
from pydantic import BaseModel, Field, field_validator

from .analysis import decomposition_for
from .decomposition import decomposition_doc
from .engine import (
    EnginePlan,
    InessentialOpeningError,
    TerminalStateError,
    engine_move,
    evaluate_position,
    plan_first_player,
    plan_second_player,
    winning_openings,
)
from .errors import InternalInvariantError
from .game import (
    CONSTRAINTS,
    GameState,
    IllegalMoveError,
    ONGOING,
    RESULT_BY_STATUS,
    Ruleset,
    apply_move,
    graph_for,
    legal_moves,
    new_game,
)

log = logging.getLogger("junipergreen.service")

DEFAULT_N_LIMIT = 1000
ENGINE_ROLES = ("first", "second", "none")


class CreateGameBody(BaseModel):
    n: int = Field(ge=1)
    constraint: str = "none"
    engine_role: str = "none"

    @field_validator("constraint")
    @classmethod
    def _constraint_known(cls, v: str) -> str:
        if v not in CONSTRAINTS:
            raise ValueError(f"constraint must be one of {CONSTRAINTS}")
        return v

    @field_validator("engine_role")
    @classmethod
    def _role_known(cls, v: str) -> str:
        if v not in ENGINE_ROLES:
            raise ValueError(f"engine_role must be one of {ENGINE_ROLES}")
        return v


class MoveBody(BaseModel):
    move: int


@dataclass
class GameSession:
    id: str
    state: GameState
    engine_role: str
    engine_plan: EnginePlan | None
    created_at: float
    updated_at: float
    lock: threading.Lock = field(default_factory=threading.Lock)


class SessionStore:
    def __init__(self) -> None:
        self._sessions: dict[str, GameSession] = {}
        self._lock = threading.Lock()

    def add(self, session: GameSession) -> None:
        with self._lock:
            self._sessions[session.id] = session

    def get(self, session_id: str) -> GameSession:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise HTTPException(status_code=404, detail=f"unknown session {session_id}")
        return session

    def remove(self, session_id: str) -> None:
        with self._lock:
            if session_id not in self._sessions:
                raise HTTPException(status_code=404, detail=f"unknown session {session_id}")
            del self._sessions[session_id]


def state_doc(s: GameState) -> dict:
    return {
        "n": s.ruleset.n,
        "constraint": s.ruleset.first_move_constraint,
        "moves": list(s.history),
        "used": sorted(s.used),
        "current": s.current,
        "to_move": f"player{s.to_move}",
        "result": RESULT_BY_STATUS[s.status],
        "legal_moves": legal_moves(s),
    }


def _session_doc(session: GameSession) -> dict:
    return {
        "id": session.id,
        "engine_role": session.engine_role,
        "created_at": session.created_at,
        "updated_at": session.updated_at,
        "state": state_doc(session.state),
    }


def _engine_is_to_move(session: GameSession) -> bool:
    if session.engine_role not in ("first", "second"):
        return False
    engine_player = 1 if session.engine_role == "first" else 2
    return session.state.status == ONGOING and session.state.to_move == engine_player


def _engine_take_turn(session: GameSession) -> int | None:
    """Play one engine move if it is the engine's turn; returns the move.

    Builds the plan lazily: the first-mover plan when the engine opens, the
    second-mover plan right after the human opening.  Theoretically lost
    positions get no plan and fall back to the first legal move.
    """
    if not _engine_is_to_move(session):
        return None
    s = session.state
    g = graph_for(s.ruleset.n)
    if s.current is None:
        winning = winning_openings(g, s.ruleset.first_move_constraint)
        if winning:
            move = winning[0]
            session.engine_plan = plan_first_player(g, move)
        else:
            move = legal_moves(s)[0]
    else:
        if session.engine_plan is None and len(s.history) == 1:
            try:
                session.engine_plan = plan_second_player(g, s.history[0])
            except InessentialOpeningError:
                session.engine_plan = None
        if session.engine_plan is not None:
            move = engine_move(session.engine_plan, s)
        else:
            move = legal_moves(s)[0]
    session.state = apply_move(session.state, move)
    return move


def create_app(n_limit: int | None = None) -> FastAPI:
    if n_limit is None:
        n_limit = int(os.environ.get("JG_N_LIMIT", DEFAULT_N_LIMIT))
    app = FastAPI(title="junipergreen", version="0.1.0")
    # The browser UI is served as a plain file, so allow cross-origin reads.
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    store = SessionStore()
    app.state.n_limit = n_limit
    app.state.sessions = store

    def _check_n(n: int) -> None:
        if not 1 <= n <= n_limit:
            raise HTTPException(
                status_code=404, detail=f"n must be within 1..{n_limit}"
            )

    @app.exception_handler(InternalInvariantError)
    async def _internal_invariant(request: Request, exc: InternalInvariantError):
        log.error("internal invariant breach on %s: %s", request.url.path, exc)
        return JSONResponse(status_code=500, content={"detail": str(exc)})

    @app.get("/api/v1/decomposition/{n}")
    def get_decomposition(n: int) -> dict:
        _check_n(n)
        return decomposition_doc(n, decomposition_for(n))

    @app.get("/api/v1/openings/{n}")
    def get_openings(n: int, constraint: str = "none") -> dict:
        _check_n(n)
        if constraint not in CONSTRAINTS:
            raise HTTPException(
                status_code=422, detail=f"constraint must be one of {CONSTRAINTS}"
            )
        winning = winning_openings(graph_for(n), constraint)
        return {"n": n, "constraint": constraint, "winning": winning}

    @app.post("/api/v1/games", status_code=201)
    def create_game(body: CreateGameBody) -> dict:
        _check_n(body.n)
        state = new_game(Ruleset(n=body.n, first_move_constraint=body.constraint))
        now = time.time()
        session = GameSession(
            id=uuid.uuid4().hex,
            state=state,
            engine_role=body.engine_role,
            engine_plan=None,
            created_at=now,
            updated_at=now,
        )
        with session.lock:
            _engine_take_turn(session)
        store.add(session)
        return {"id": session.id, "state": state_doc(session.state)}

    @app.get("/api/v1/games/{session_id}")
    def get_game(session_id: str) -> dict:
        return _session_doc(store.get(session_id))

    @app.post("/api/v1/games/{session_id}/moves")
    def post_move(session_id: str, body: MoveBody) -> dict:
        session = store.get(session_id)
        with session.lock:
            try:
                session.state = apply_move(session.state, body.move)
            except IllegalMoveError as exc:
                raise HTTPException(status_code=409, detail=str(exc)) from exc
            applied = [body.move]
            reply = _engine_take_turn(session)
            if reply is not None:
                applied.append(reply)
            session.updated_at = time.time()
            return {"id": session.id, "moves": applied, "state": state_doc(session.state)}

    @app.get("/api/v1/games/{session_id}/hint")
    def get_hint(session_id: str) -> dict:
        session = store.get(session_id)
        with session.lock:
            state = session.state
        try:
            _, winning = evaluate_position(graph_for(state.ruleset.n), state)
        except TerminalStateError as exc:
            raise HTTPException(status_code=409, detail=str(exc)) from exc
        return {"winning_moves": winning, "exact": True}

    @app.delete("/api/v1/games/{session_id}", status_code=204)
    def delete_game(session_id: str) -> Response:
        store.remove(session_id)
        return Response(status_code=204)

    return app
