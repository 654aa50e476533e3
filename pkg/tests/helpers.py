"""Shared test oracles and exercise drivers.

Everything here is deliberately independent of the production search code:
subset-DP matching sizes, O(n^2) divisibility scans, and brute game-tree
walks exist to catch the clever code being cleverly wrong.
"""

from __future__ import annotations

import random
from functools import lru_cache

from junipergreen.divgraph import Graph, graph_from_edges
from junipergreen.engine import engine_move, plan_first_player, plan_second_player
from junipergreen.game import (
    GameState,
    ONGOING,
    Ruleset,
    apply_move,
    graph_for,
    legal_moves,
    new_game,
)


def random_graph(rng: random.Random, n: int, p: float = 0.3) -> Graph:
    labels = list(range(1, n + 1))
    edges = [(i, j) for i in labels for j in labels if i < j and rng.random() < p]
    return graph_from_edges(labels, edges)


def random_graph_capped(rng: random.Random, n: int, p: float = 0.3, max_edges: int = 24) -> Graph:
    while True:
        g = random_graph(rng, n, p)
        if g.edge_count <= max_edges:
            return g


def nu_subset_dp(g: Graph) -> int:
    """Maximum matching size by DP over vertex subsets; O(2^n), n <= ~18."""
    labels = list(g.vertex_labels)
    index = {v: i for i, v in enumerate(labels)}
    nbr_mask = [0] * len(labels)
    for v in labels:
        for w in g.adjacency[v]:
            nbr_mask[index[v]] |= 1 << index[w]

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if mask == 0:
            return 0
        low = mask & -mask
        i = low.bit_length() - 1
        out = best(mask ^ low)  # leave vertex i unmatched
        partners = nbr_mask[i] & mask
        while partners:
            plow = partners & -partners
            partners ^= plow
            out = max(out, 1 + best(mask ^ low ^ plow))
        return out

    result = best((1 << len(labels)) - 1)
    best.cache_clear()
    return result


def used_bitmask(state: GameState) -> int:
    mask = 0
    for k in state.used:
        mask |= 1 << (k - 1)
    return mask


def reachable_ongoing_states(n: int):
    """Every reachable (used, current) position of the unconstrained game, once each."""
    seen: set[tuple[frozenset[int], int]] = set()
    start = new_game(Ruleset(n=n))
    stack = [apply_move(start, v) for v in legal_moves(start)]
    while stack:
        s = stack.pop()
        key = (s.used, s.current)
        if key in seen:
            continue
        seen.add(key)
        if s.status != ONGOING:
            continue
        yield s
        for w in legal_moves(s):
            stack.append(apply_move(s, w))


def engine_runs_all_adversary_lines(n: int, openings: set[int]) -> int:
    """Drive the engine through every adversary line for every opening of G_n.

    The theoretically winning side is played by the engine (first-player plan
    for openings in D, second-player plan otherwise).  Returns the number of
    finished lines; raises AssertionError the moment the engine's side loses
    or a plan invariant breaks.
    """
    g = graph_for(n)
    lines = 0

    def walk(state: GameState, plan, engine_player: int) -> None:
        nonlocal lines
        if state.status != ONGOING:
            assert state.status == f"won-by-player-{engine_player}", (n, state.history)
            lines += 1
            return
        for reply in legal_moves(state):
            s2 = apply_move(state, reply)
            if s2.status != ONGOING:
                assert s2.status == f"won-by-player-{engine_player}", (n, s2.history)
                lines += 1
                continue
            walk(apply_move(s2, engine_move(plan, s2)), plan, engine_player)

    for v in range(1, n + 1):
        start = new_game(Ruleset(n=n))
        if v in openings:
            plan = plan_first_player(g, v)
            walk(apply_move(start, v), plan, engine_player=1)
        else:
            plan = plan_second_player(g, v)
            s1 = apply_move(start, v)
            if s1.status != ONGOING:
                assert s1.status == "won-by-player-2", (n, v)
                lines += 1
                continue
            walk(apply_move(s1, engine_move(plan, s1)), plan, engine_player=2)
    return lines
