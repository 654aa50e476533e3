"""Perfect-play strategy synthesis from maximum matchings.

Winning openings are exactly the inessential vertices of the divisibility
graph, and a fixed maximum matching converts that fact into play: open on an
exposed vertex and answer every reply with its partner (first mover), or
cover the opponent's opening and mirror through the matching (second mover).
Plans freeze one matching at game start and never re-plan.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import decompose
from .divgraph import Graph, induced_subgraph
from .errors import DomainError, InternalInvariantError
from .game import GameState, ONGOING, legal_moves, opening_allowed
from .matching import Matching, maximum_matching

ROLE_FIRST = "first-mover"
ROLE_SECOND = "second-mover"


class EssentialOpeningError(DomainError):
    """First-player plans need an opening some maximum matching misses."""


class InessentialOpeningError(DomainError):
    """Second-player plans refuse openings the opponent wins with."""


class TerminalStateError(DomainError):
    """Position evaluation was asked for a finished game."""


class BrokenPlanError(InternalInvariantError):
    """The follow-the-matching guarantee failed; an engine bug, not a game situation."""


@dataclass(frozen=True)
class EnginePlan:
    """A role plus the fixed maximum matching the engine follows all game."""

    role: str
    matching: Matching
    opening: int


def winning_openings(g: Graph, constraint: str = "none") -> list[int]:
    """D(g) filtered to the openings the first-move rule allows, ascending."""
    return [v for v in decompose(g).d_set if opening_allowed(v, constraint)]


def plan_first_player(g: Graph, opening: int) -> EnginePlan:
    """Plan built on a maximum matching of g that leaves `opening` exposed.

    A maximum matching of g - opening has full size nu(g) exactly when the
    opening is inessential; anything less means the opening was essential.
    """
    g.require_vertex(opening)
    nu = maximum_matching(g).size
    rest = induced_subgraph(g, set(g.vertex_labels) - {opening})
    m = maximum_matching(rest)
    if m.size != nu:
        raise EssentialOpeningError(
            f"{opening} is covered by every maximum matching; not a winning opening"
        )
    partner: dict[int, int | None] = dict(m.partner)
    partner[opening] = None
    full = Matching(partner={v: partner[v] for v in g.vertex_labels})
    return EnginePlan(role=ROLE_FIRST, matching=full, opening=opening)


def plan_second_player(g: Graph, opening: int) -> EnginePlan:
    """Plan for answering an essential opening by following any maximum matching."""
    g.require_vertex(opening)
    if opening in set(decompose(g).d_set):
        raise InessentialOpeningError(
            f"{opening} is a winning opening for the opponent; refusing a losing plan"
        )
    return EnginePlan(role=ROLE_SECOND, matching=maximum_matching(g), opening=opening)


def engine_move(plan: EnginePlan, s: GameState) -> int:
    """The partner of the current number under the plan's matching.

    Berge's argument guarantees the partner exists and is unused whenever the
    plan's preconditions held at game start and the engine followed the plan;
    any violation here is reported as a broken invariant.
    """
    engine_player = 1 if plan.role == ROLE_FIRST else 2
    if s.status != ONGOING:
        raise BrokenPlanError("engine asked to move in a finished game")
    if s.to_move != engine_player:
        raise BrokenPlanError("engine asked to move out of turn")
    if s.current is None:
        raise BrokenPlanError("engine asked to move before any opening")
    partner = plan.matching.partner.get(s.current)
    if partner is None:
        raise BrokenPlanError(f"current number {s.current} is exposed in the plan matching")
    if partner in s.used:
        raise BrokenPlanError(f"planned reply {partner} to {s.current} was already used")
    return partner


def evaluate_position(g: Graph, s: GameState) -> tuple[bool, list[int]]:
    """Exact evaluation of an ongoing position via one decomposition.

    The continuation after playing w is a fresh game on the subgraph induced
    by the currently unused numbers, opened at w; so the winning moves are
    the legal moves that are inessential there.  With an empty history this
    is winning_openings under the state's first-move constraint.
    """
    if s.status != ONGOING:
        raise TerminalStateError("cannot evaluate a finished game")
    unused = set(g.vertex_labels) - s.used
    d_here = set(decompose(induced_subgraph(g, unused)).d_set)
    winning = [w for w in legal_moves(s) if w in d_here]
    return bool(winning), winning
