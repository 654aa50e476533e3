"""Juniper Green: the game, its divisibility graph, and perfect play.

The winning opening moves on 1..n are exactly the inessential vertices of
the divisibility graph; this package computes them via blossom matching and
the Gallai-Edmonds partition, plays the matching-following strategies, and
cross-validates everything against an exhaustive game-tree solver at small n.
"""

from .decomposition import Decomposition, decompose, decompose_naive, is_inessential
from .divgraph import (
    Graph,
    LayoutPoint,
    build_divisibility_graph,
    circular_layout,
    induced_subgraph,
    is_edge,
)
from .engine import (
    EnginePlan,
    engine_move,
    evaluate_position,
    plan_first_player,
    plan_second_player,
    winning_openings,
)
from .game import GameState, Ruleset, apply_move, legal_moves, new_game
from .matching import (
    AlternatingPath,
    Matching,
    enumerate_maximum_matchings,
    find_augmenting_path,
    maximum_matching,
    verify_matching,
)
from .solver import SolveReport, SolverKey, solve_openings, solve_state

__version__ = "0.1.0"

__all__ = [
    "AlternatingPath",
    "Decomposition",
    "EnginePlan",
    "GameState",
    "Graph",
    "LayoutPoint",
    "Matching",
    "Ruleset",
    "SolveReport",
    "SolverKey",
    "apply_move",
    "build_divisibility_graph",
    "circular_layout",
    "decompose",
    "decompose_naive",
    "engine_move",
    "enumerate_maximum_matchings",
    "evaluate_position",
    "find_augmenting_path",
    "induced_subgraph",
    "is_edge",
    "is_inessential",
    "legal_moves",
    "maximum_matching",
    "new_game",
    "plan_first_player",
    "plan_second_player",
    "solve_openings",
    "solve_state",
    "verify_matching",
    "winning_openings",
]
