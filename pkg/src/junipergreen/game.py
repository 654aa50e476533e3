"""Juniper Green state machine.

Players alternate picking unused numbers from 1..n, each a factor or multiple
of the previous pick; whoever has no legal move loses.  The first move can
optionally be restricted to even numbers or to composites.  States are
immutable values: apply_move returns a new state, so solvers can memoize and
the service can hand out snapshots freely.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .divgraph import Graph, build_divisibility_graph, is_composite
from .errors import DomainError

CONSTRAINTS = ("none", "even", "composite")

ONGOING = "ongoing"
P1_WIN = "won-by-player-1"
P2_WIN = "won-by-player-2"

RESULT_BY_STATUS = {ONGOING: "ongoing", P1_WIN: "player1", P2_WIN: "player2"}
STATUS_BY_RESULT = {v: k for k, v in RESULT_BY_STATUS.items()}


class InvalidRulesetError(DomainError):
    pass


class IllegalMoveError(DomainError):
    """A move that breaks a rule; `reason` names the violated rule."""

    def __init__(self, reason: str, detail: str):
        super().__init__(f"illegal move ({reason}): {detail}")
        self.reason = reason


class TranscriptError(DomainError):
    """A transcript document that does not replay into a consistent game."""


@lru_cache(maxsize=64)
def graph_for(n: int) -> Graph:
    """Shared immutable G_n instances; cheap to rebuild, cheaper to reuse."""
    return build_divisibility_graph(n)


def opening_allowed(k: int, constraint: str) -> bool:
    if constraint == "none":
        return True
    if constraint == "even":
        return k % 2 == 0
    if constraint == "composite":
        return is_composite(k)
    raise InvalidRulesetError(f"unknown first-move constraint {constraint!r}")


@dataclass(frozen=True)
class Ruleset:
    n: int
    first_move_constraint: str = "none"

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidRulesetError(f"game needs n >= 1, got {self.n}")
        if self.first_move_constraint not in CONSTRAINTS:
            raise InvalidRulesetError(
                f"first-move constraint must be one of {CONSTRAINTS}, "
                f"got {self.first_move_constraint!r}"
            )

    def opening_moves(self) -> list[int]:
        return [k for k in range(1, self.n + 1) if opening_allowed(k, self.first_move_constraint)]


@dataclass(frozen=True)
class GameState:
    ruleset: Ruleset
    history: tuple[int, ...]
    used: frozenset[int]
    current: int | None
    to_move: int
    status: str


def _status_after(rs: Ruleset, history: tuple[int, ...], mover: int | None) -> str:
    """Terminal iff the player now to move has nothing legal; mover wins then."""
    if not history:
        if rs.opening_moves():
            return ONGOING
        return P2_WIN  # no legal opening exists, player 1 is stuck immediately
    g = graph_for(rs.n)
    used = set(history)
    if any(w not in used for w in g.adjacency[history[-1]]):
        return ONGOING
    return P1_WIN if mover == 1 else P2_WIN


def new_game(rs: Ruleset) -> GameState:
    return GameState(
        ruleset=rs,
        history=(),
        used=frozenset(),
        current=None,
        to_move=1,
        status=_status_after(rs, (), None),
    )


def legal_moves(s: GameState) -> list[int]:
    """Sorted legal moves; empty exactly when the state is terminal."""
    if s.current is None:
        return [] if s.status != ONGOING else s.ruleset.opening_moves()
    g = graph_for(s.ruleset.n)
    return [w for w in g.adjacency[s.current] if w not in s.used]


def apply_move(s: GameState, k: int) -> GameState:
    if s.status != ONGOING:
        raise IllegalMoveError("game-over", f"game already {s.status}")
    if not 1 <= k <= s.ruleset.n:
        raise IllegalMoveError("range", f"{k} is outside 1..{s.ruleset.n}")
    if k in s.used:
        raise IllegalMoveError("used", f"{k} was already selected")
    if s.current is None:
        if not opening_allowed(k, s.ruleset.first_move_constraint):
            raise IllegalMoveError(
                "constraint",
                f"opening {k} violates the {s.ruleset.first_move_constraint} first-move rule",
            )
    else:
        g = graph_for(s.ruleset.n)
        if k not in set(g.adjacency[s.current]):
            raise IllegalMoveError(
                "non-adjacent", f"{k} is neither a factor nor a multiple of {s.current}"
            )
    history = s.history + (k,)
    return GameState(
        ruleset=s.ruleset,
        history=history,
        used=s.used | {k},
        current=k,
        to_move=2 if s.to_move == 1 else 1,
        status=_status_after(s.ruleset, history, s.to_move),
    )


def replay(rs: Ruleset, moves: list[int] | tuple[int, ...]) -> GameState:
    state = new_game(rs)
    for k in moves:
        state = apply_move(state, k)
    return state


def transcript_doc(s: GameState) -> dict:
    return {
        "n": s.ruleset.n,
        "constraint": s.ruleset.first_move_constraint,
        "moves": list(s.history),
        "result": RESULT_BY_STATUS[s.status],
    }


def state_from_transcript(doc: dict) -> GameState:
    """Rebuild and fully validate a game from its transcript document."""
    try:
        n = doc["n"]
        constraint = doc["constraint"]
        moves = doc["moves"]
        result = doc["result"]
    except (KeyError, TypeError) as exc:
        raise TranscriptError(f"transcript missing field: {exc}") from exc
    if not isinstance(n, int) or not isinstance(moves, list) or not all(
        isinstance(k, int) for k in moves
    ):
        raise TranscriptError("transcript fields have wrong types")
    if result not in STATUS_BY_RESULT:
        raise TranscriptError(f"unknown result {result!r}")
    try:
        rs = Ruleset(n=n, first_move_constraint=constraint)
        state = replay(rs, moves)
    except DomainError as exc:
        raise TranscriptError(f"transcript does not replay: {exc}") from exc
    if STATUS_BY_RESULT[result] != state.status:
        raise TranscriptError(
            f"recorded result {result!r} disagrees with replayed status {state.status!r}"
        )
    return state


def save_transcript(s: GameState, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(transcript_doc(s), f)
        f.write("\n")


def load_transcript(path: str) -> GameState:
    try:
        with open(path, "r", encoding="utf-8") as f:
            doc = json.load(f)
    except (OSError, json.JSONDecodeError) as exc:
        raise TranscriptError(f"cannot read transcript {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise TranscriptError("transcript must be a JSON object")
    return state_from_transcript(doc)
