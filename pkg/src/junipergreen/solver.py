"""Exhaustive memoized game-tree solver.

Ground truth for every strategic claim at small n.  A position is fully
described by (used bitmask, current number): legality only depends on those
two, so the game tree collapses onto that state space.  The solver never
looks at matchings; its independence from the engine is the point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .divgraph import Graph
from .errors import DomainError
from .game import graph_for, opening_allowed

MAX_SOLVER_N = 20


class SolverSizeError(DomainError):
    """Instance exceeds the n <= MAX_SOLVER_N exhaustive-search guard."""


@dataclass(frozen=True)
class SolverKey:
    """used: bitmask over 1..n (bit k-1 is number k); current: last number played."""

    used: int
    current: int

    def __post_init__(self) -> None:
        if self.current < 1 or not self.used >> (self.current - 1) & 1:
            raise DomainError("solver key must have the current number marked used")


@dataclass(frozen=True)
class SolveReport:
    n: int
    constraint: str
    winning_openings: tuple[int, ...]
    states_visited: int


def _check_size(n: int) -> None:
    if n > MAX_SOLVER_N:
        raise SolverSizeError(f"exhaustive solving is guarded to n <= {MAX_SOLVER_N}, got {n}")


def _neighbor_masks(g: Graph) -> list[int]:
    """masks[k] has bit j-1 set iff j ~ k; index 0 unused."""
    masks = [0] * (g.vertex_count + 1)
    for v in g.vertex_labels:
        acc = 0
        for w in g.adjacency[v]:
            acc |= 1 << (w - 1)
        masks[v] = acc
    return masks


class ExhaustiveSolver:
    """Depth-first perfect play over one G_n, owning a private memo table."""

    def __init__(self, g: Graph):
        n = g.vertex_count
        if tuple(g.vertex_labels) != tuple(range(1, n + 1)):
            raise DomainError("solver expects the divisibility graph on 1..n")
        _check_size(n)
        self.n = n
        self._masks = _neighbor_masks(g)
        self._memo: dict[int, bool] = {}

    @property
    def states_visited(self) -> int:
        return len(self._memo)

    def _wins(self, used: int, current: int, memo: dict[int, bool] | None) -> bool:
        """True iff the player to move from (used, current) can force a win."""
        if memo is not None:
            key = (used << 5) | current
            cached = memo.get(key)
            if cached is not None:
                return cached
        result = False
        avail = self._masks[current] & ~used
        while avail:
            low = avail & -avail
            avail ^= low
            if not self._wins(used | low, low.bit_length(), memo):
                result = True
                break
        if memo is not None:
            memo[key] = result
        return result

    def wins(self, key: SolverKey, use_memo: bool = True) -> bool:
        return self._wins(key.used, key.current, self._memo if use_memo else None)

    def winning_replies(self, key: SolverKey) -> list[int]:
        """All moves after which the opponent is lost, ascending."""
        replies = []
        avail = self._masks[key.current] & ~key.used
        while avail:
            low = avail & -avail
            avail ^= low
            if not self._wins(key.used | low, low.bit_length(), self._memo):
                replies.append(low.bit_length())
        return replies

    def legal_replies(self, key: SolverKey) -> list[int]:
        replies = []
        avail = self._masks[key.current] & ~key.used
        while avail:
            low = avail & -avail
            avail ^= low
            replies.append(low.bit_length())
        return replies

    def optimal_move(self, key: SolverKey) -> int | None:
        """A winning reply if one exists, else the smallest legal reply, else None."""
        winning = self.winning_replies(key)
        if winning:
            return winning[0]
        legal = self.legal_replies(key)
        return legal[0] if legal else None


def solve_state(g: Graph, key: SolverKey, use_memo: bool = True) -> bool:
    """True iff the player to move wins from this mid-game position."""
    return ExhaustiveSolver(g).wins(key, use_memo=use_memo)


def solve_openings(n: int, constraint: str = "none") -> SolveReport:
    """Winning openings by exhaustive search, plus the number of states memoized."""
    _check_size(n)
    solver = ExhaustiveSolver(graph_for(n))
    winning = []
    for v in range(1, n + 1):
        if not opening_allowed(v, constraint):
            continue
        if not solver._wins(1 << (v - 1), v, solver._memo):
            winning.append(v)
    return SolveReport(
        n=n,
        constraint=constraint,
        winning_openings=tuple(winning),
        states_visited=solver.states_visited,
    )


def solve_report_doc(report: SolveReport) -> dict:
    return {
        "n": report.n,
        "constraint": report.constraint,
        "winning": list(report.winning_openings),
        "states_visited": report.states_visited,
    }
