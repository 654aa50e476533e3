"""Divisibility graphs and plain undirected graphs on integer-labelled vertices.

The central object is G_n: vertices 1..n with an edge between distinct i, j
whenever one divides the other.  All graphs here are simple, immutable and
keep their adjacency lists sorted ascending, so every downstream operation
(move enumeration, matching scans, serialization) is deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


class InvalidGraphError(DomainError):
    """Graph construction input violates the simple-graph invariants."""


class UnknownVertexError(DomainError):
    """A vertex label that is not part of the graph was referenced."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    vertex_labels is strictly increasing; adjacency maps each label to a
    sorted tuple of neighbor labels.  Labels are preserved verbatim by
    induced subgraphs, so 1-based numbers stay meaningful everywhere.
    """

    vertex_labels: tuple[int, ...]
    adjacency: dict[int, tuple[int, ...]]

    def __post_init__(self) -> None:
        labels = self.vertex_labels
        if list(labels) != sorted(set(labels)):
            raise InvalidGraphError("vertex labels must be strictly increasing")
        if set(self.adjacency) != set(labels):
            raise InvalidGraphError("adjacency keys must match vertex labels")
        label_set = set(labels)
        for v, nbrs in self.adjacency.items():
            if list(nbrs) != sorted(set(nbrs)):
                raise InvalidGraphError(f"adjacency of {v} must be sorted and duplicate-free")
            if v in nbrs:
                raise InvalidGraphError(f"self-loop at {v}")
            for w in nbrs:
                if w not in label_set:
                    raise InvalidGraphError(f"neighbor {w} of {v} is not a vertex")
                if v not in self.adjacency[w]:
                    raise InvalidGraphError(f"edge {v}-{w} is not symmetric")

    @property
    def vertex_count(self) -> int:
        return len(self.vertex_labels)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency.values()) // 2

    def has_vertex(self, v: int) -> bool:
        return v in self.adjacency

    def require_vertex(self, v: int) -> None:
        if v not in self.adjacency:
            raise UnknownVertexError(f"unknown vertex label {v}")

    def neighbors(self, v: int) -> tuple[int, ...]:
        self.require_vertex(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (i, j) with i < j, sorted lexicographically."""
        return [(v, w) for v in self.vertex_labels for w in self.adjacency[v] if v < w]


def graph_from_edges(labels: list[int] | tuple[int, ...], edges: list[tuple[int, int]]) -> Graph:
    """Build a Graph from a vertex list and an edge list (duplicates merged)."""
    label_set = set(labels)
    nbrs: dict[int, set[int]] = {v: set() for v in sorted(label_set)}
    for i, j in edges:
        if i not in label_set or j not in label_set:
            raise InvalidGraphError(f"edge {i}-{j} uses an unknown vertex")
        if i == j:
            raise InvalidGraphError(f"self-loop at {i}")
        nbrs[i].add(j)
        nbrs[j].add(i)
    return Graph(
        vertex_labels=tuple(sorted(label_set)),
        adjacency={v: tuple(sorted(ws)) for v, ws in nbrs.items()},
    )


def build_divisibility_graph(n: int) -> Graph:
    """G_n: vertices 1..n, i ~ j iff i != j and i | j or j | i.

    Edges are found by enumerating multiples of each i (harmonic-sum work),
    never by testing all pairs.
    """
    if n < 1:
        raise InvalidGraphError(f"divisibility graph needs n >= 1, got {n}")
    nbrs: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for i in range(1, n + 1):
        for j in range(2 * i, n + 1, i):
            nbrs[i].append(j)
            nbrs[j].append(i)
    # Divisors of k arrive in ascending order before its multiples, so the
    # lists are already sorted.
    return Graph(
        vertex_labels=tuple(range(1, n + 1)),
        adjacency={v: tuple(ws) for v, ws in nbrs.items()},
    )


def induced_subgraph(g: Graph, keep: set[int] | frozenset[int] | list[int]) -> Graph:
    """Subgraph on `keep` with original labels; edges need both endpoints kept."""
    keep_set = set(keep)
    for v in keep_set:
        if v not in g.adjacency:
            raise UnknownVertexError(f"unknown vertex label {v} in keep set")
    return Graph(
        vertex_labels=tuple(sorted(keep_set)),
        adjacency={
            v: tuple(w for w in g.adjacency[v] if w in keep_set) for v in sorted(keep_set)
        },
    )


def is_edge(g: Graph, i: int, j: int) -> bool:
    g.require_vertex(i)
    g.require_vertex(j)
    return j in set(g.adjacency[i])


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest member."""
    seen: set[int] = set()
    components: list[list[int]] = []
    for start in g.vertex_labels:
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        components.append(sorted(comp))
    return components


def is_prime(k: int) -> bool:
    if k < 2:
        return False
    if k < 4:
        return True
    if k % 2 == 0:
        return False
    f = 3
    while f * f <= k:
        if k % f == 0:
            return False
        f += 2
    return True


def is_composite(k: int) -> bool:
    """k has a nontrivial divisor; 1 is neither prime nor composite."""
    return k > 1 and not is_prime(k)


@dataclass(frozen=True)
class LayoutPoint:
    """Unit-circle coordinate for one vertex of G_n."""

    vertex: int
    x: float
    y: float


def circular_layout(n: int) -> list[LayoutPoint]:
    """Place vertex i at (cos(2*pi*i/n), sin(2*pi*i/n))."""
    if n < 1:
        raise InvalidGraphError(f"layout needs n >= 1, got {n}")
    points = []
    for i in range(1, n + 1):
        angle = 2.0 * math.pi * i / n
        points.append(LayoutPoint(vertex=i, x=math.cos(angle), y=math.sin(angle)))
    return points


def write_layout_csv(points: list[LayoutPoint], path: str) -> None:
    """Write `vertex,x,y` rows with 12 significant digits."""
    with open(path, "w", encoding="utf-8") as f:
        f.write("vertex,x,y\n")
        for p in points:
            f.write(f"{p.vertex},{p.x:.12g},{p.y:.12g}\n")


def write_edges_csv(g: Graph, path: str) -> None:
    """Write `i,j` rows with i < j, sorted lexicographically as pairs."""
    with open(path, "w", encoding="utf-8") as f:
        f.write("i,j\n")
        for i, j in sorted(g.edges()):
            f.write(f"{i},{j}\n")
