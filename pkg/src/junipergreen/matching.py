"""Maximum-cardinality matching on general graphs via Edmonds' blossom search.

The search keeps the classic base/parent bookkeeping: odd cycles found while
growing alternating trees are contracted by rebasing their vertices onto the
cycle base, which is what makes the method correct on non-bipartite graphs.
Everything scans vertices and adjacency in ascending label order, so results
are reproducible call to call.

Also provided: an independent optimality certificate (find_augmenting_path on
arbitrary matchings) and an exhaustive enumerator of all maximum matchings,
used as a test oracle on small instances.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .divgraph import Graph
from .errors import DomainError, InternalInvariantError

MAX_ENUMERATION_EDGES = 24


class InvalidMatchingError(DomainError):
    """A matching that violates its invariants was passed where a valid one is required."""


class OversizedEnumerationError(DomainError):
    """Exhaustive matching enumeration was asked for a graph above the edge guard."""


@dataclass(frozen=True)
class Matching:
    """A set of pairwise-disjoint edges, stored as a full partner map.

    Every vertex of the host graph has an entry; exposed vertices map to
    None, so exposure queries are O(1).  Treat instances as immutable.
    """

    partner: dict[int, int | None]

    @property
    def size(self) -> int:
        return sum(1 for w in self.partner.values() if w is not None) // 2

    def partner_of(self, v: int) -> int | None:
        return self.partner[v]

    def is_exposed(self, v: int) -> bool:
        return self.partner[v] is None

    def exposed(self) -> list[int]:
        return sorted(v for v, w in self.partner.items() if w is None)

    def pairs(self) -> list[tuple[int, int]]:
        """Matched edges as (u, v) with u < v, sorted."""
        return sorted((u, w) for u, w in self.partner.items() if w is not None and u < w)


@dataclass(frozen=True)
class AlternatingPath:
    """Vertex sequence of an alternating path (augmenting when both ends are exposed)."""

    vertices: tuple[int, ...]


def verify_matching(g: Graph, m: Matching) -> bool:
    """True iff m satisfies every Matching invariant against g; never raises."""
    if set(m.partner) != set(g.vertex_labels):
        return False
    for u, w in m.partner.items():
        if w is None:
            continue
        if w == u or w not in m.partner or m.partner[w] != u:
            return False
        if w not in g.adjacency or w not in set(g.adjacency[u]):
            return False
    return True


def _require_valid(g: Graph, m: Matching) -> None:
    if not verify_matching(g, m):
        raise InvalidMatchingError("matching violates its invariants on this graph")


def _greedy_seed(g: Graph) -> dict[int, int | None]:
    """Deterministic greedy matching: each vertex grabs its first free neighbor."""
    mate: dict[int, int | None] = {v: None for v in g.vertex_labels}
    for v in g.vertex_labels:
        if mate[v] is None:
            for w in g.adjacency[v]:
                if mate[w] is None:
                    mate[v] = w
                    mate[w] = v
                    break
    return mate


def _lowest_common_base(
    base: dict[int, int],
    parent: dict[int, int],
    mate: dict[int, int | None],
    a: int,
    b: int,
) -> int:
    """Base of the first common ancestor of two outer vertices in one tree."""
    on_a_path: set[int] = set()
    v = a
    while True:
        v = base[v]
        on_a_path.add(v)
        mv = mate[v]
        if mv is None:
            break
        v = parent[mv]
    w = b
    while True:
        w = base[w]
        if w in on_a_path:
            return w
        mw = mate[w]
        if mw is None:
            raise InternalInvariantError("blossom walk crossed into a different tree")
        w = parent[mw]


def _mark_blossom_arm(
    base: dict[int, int],
    parent: dict[int, int],
    mate: dict[int, int | None],
    v: int,
    stop: int,
    child: int,
    marked: set[int],
) -> None:
    """Climb from outer vertex v to the blossom base, rewiring parent pointers.

    After the rewrite, the augmenting walk can thread through the blossom on
    the correct parity side.
    """
    while base[v] != stop:
        mv = mate[v]
        assert mv is not None
        marked.add(base[v])
        marked.add(base[mv])
        parent[v] = child
        child = mv
        v = parent[mv]


def _grow_forest(
    g: Graph,
    mate: dict[int, int | None],
    roots: list[int],
    skip: int | None = None,
    allow_augment: bool = True,
) -> tuple[int | None, dict[int, int], set[int]]:
    """Grow blossom-aware alternating trees from the exposed roots.

    Returns (end, parent, outer).  If an augmenting path is found, `end` is
    its exposed non-root endpoint and `parent` holds the pointers to flip
    along; otherwise `end` is None and `outer` is the complete set of outer
    vertices (roots, mates of inner vertices, absorbed blossom members).

    `skip` hides one vertex, searching g - skip without rebuilding the graph.
    With allow_augment=False any augmenting event raises, which is how the
    decomposition search asserts it was given a maximum matching.
    """
    base = {v: v for v in g.vertex_labels}
    parent: dict[int, int] = {}
    tree_root: dict[int, int] = {}
    outer: set[int] = set()
    queue: deque[int] = deque()
    for r in roots:
        outer.add(r)
        tree_root[r] = r
        queue.append(r)

    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if w == skip:
                continue
            if base[v] == base[w] or mate[v] == w:
                continue
            if w in outer:
                if tree_root[v] != tree_root[w]:
                    # Edge between two trees: an augmenting path exists
                    # between their roots, impossible for a maximum matching.
                    raise InternalInvariantError(
                        "outer-outer bridge between distinct trees in a no-augment search"
                    )
                stop = _lowest_common_base(base, parent, mate, v, w)
                marked: set[int] = set()
                _mark_blossom_arm(base, parent, mate, v, stop, w, marked)
                _mark_blossom_arm(base, parent, mate, w, stop, v, marked)
                for u in g.vertex_labels:
                    if base[u] in marked:
                        base[u] = stop
                        if u not in outer:
                            outer.add(u)
                            tree_root[u] = tree_root[v]
                            queue.append(u)
            elif w not in parent:
                parent[w] = v
                tree_root[w] = tree_root[v]
                mw = mate[w]
                if mw is None:
                    if not allow_augment:
                        raise InternalInvariantError(
                            "augmenting path found in a no-augment search"
                        )
                    return w, parent, outer
                outer.add(mw)
                tree_root[mw] = tree_root[v]
                queue.append(mw)
    return None, parent, outer


def _flip_augmenting_walk(mate: dict[int, int | None], parent: dict[int, int], end: int) -> None:
    """Re-pair mates along the recovered augmenting walk ending at `end`."""
    v: int | None = end
    while v is not None:
        pv = parent[v]
        next_v = mate[pv]
        mate[v] = pv
        mate[pv] = v
        v = next_v


def _augment_once(g: Graph, mate: dict[int, int | None], root: int, skip: int | None = None) -> bool:
    """One search phase from a single exposed root; augments in place on success."""
    end, parent, _ = _grow_forest(g, mate, [root], skip=skip)
    if end is None:
        return False
    _flip_augmenting_walk(mate, parent, end)
    return True


def maximum_matching(g: Graph) -> Matching:
    """A maximum-cardinality matching of g, deterministic for a fixed graph.

    Greedy seed, then one blossom phase per remaining exposed vertex in
    ascending order; a vertex with no augmenting path now never gains one
    after later augmentations, so a single pass suffices.
    """
    mate = _greedy_seed(g)
    for v in g.vertex_labels:
        if mate[v] is None:
            _augment_once(g, mate, v)
    return Matching(partner={v: mate[v] for v in g.vertex_labels})


def has_augmenting_path(g: Graph, m: Matching, root: int | None = None) -> bool:
    """True iff m admits an augmenting path (from `root` only, when given).

    Does not validate or mutate m; used where only existence matters.
    """
    mate = dict(m.partner)
    roots = [root] if root is not None else m.exposed()
    for r in roots:
        end, _, _ = _grow_forest(g, mate, [r])
        if end is not None:
            return True
    return False


def augment_matching(m: Matching, path: AlternatingPath) -> Matching:
    """Toggle the matching along an augmenting path."""
    mate = dict(m.partner)
    verts = path.vertices
    for i in range(0, len(verts) - 1, 2):
        u, w = verts[i], verts[i + 1]
        mate[u] = w
        mate[w] = u
    return Matching(partner=mate)


def _matched_pairs(mate: dict[int, int | None]) -> set[tuple[int, int]]:
    return {(u, w) for u, w in mate.items() if w is not None and u < w}


def _path_from_rematch(
    old: dict[int, int | None], new: dict[int, int | None], start: int
) -> list[int]:
    """Order the symmetric difference of two matchings into a path from `start`."""
    diff_adj: dict[int, list[int]] = {}
    for u, w in _matched_pairs(old) ^ _matched_pairs(new):
        diff_adj.setdefault(u, []).append(w)
        diff_adj.setdefault(w, []).append(u)
    path = [start]
    prev: int | None = None
    cur = start
    while True:
        nxt = [x for x in diff_adj.get(cur, []) if x != prev]
        if not nxt:
            return path
        if len(nxt) > 1:
            raise InternalInvariantError("matching difference is not a simple path")
        prev, cur = cur, nxt[0]
        path.append(cur)


def find_augmenting_path(g: Graph, m: Matching) -> AlternatingPath | None:
    """An exposed-to-exposed alternating path, or None iff m is maximum.

    Runs one blossom phase per exposed root (ascending) against the given
    matching; any returned path is re-verified to augment m into a valid
    matching of size + 1 before being handed back.
    """
    _require_valid(g, m)
    for root in m.exposed():
        mate = dict(m.partner)
        end, parent, _ = _grow_forest(g, mate, [root])
        if end is None:
            continue
        _flip_augmenting_walk(mate, parent, end)
        path = AlternatingPath(vertices=tuple(_path_from_rematch(m.partner, mate, root)))
        _check_augmenting(g, m, path)
        return path
    return None


def _check_augmenting(g: Graph, m: Matching, path: AlternatingPath) -> None:
    """Certify that `path` is a genuine augmenting path for m on g."""
    verts = path.vertices
    if len(verts) < 2 or len(verts) % 2 != 0:
        raise InternalInvariantError("augmenting path must have even vertex count >= 2")
    if len(set(verts)) != len(verts):
        raise InternalInvariantError("augmenting path revisits a vertex")
    if not (m.is_exposed(verts[0]) and m.is_exposed(verts[-1])):
        raise InternalInvariantError("augmenting path endpoints must be exposed")
    for i in range(len(verts) - 1):
        u, w = verts[i], verts[i + 1]
        if w not in set(g.adjacency[u]):
            raise InternalInvariantError(f"path edge {u}-{w} is not a graph edge")
        in_matching = m.partner[u] == w
        if in_matching != (i % 2 == 1):
            raise InternalInvariantError("path edges do not alternate around the matching")
    augmented = augment_matching(m, path)
    if not verify_matching(g, augmented) or augmented.size != m.size + 1:
        raise InternalInvariantError("augmenting along the path did not grow the matching by 1")


def outer_vertices(g: Graph, m: Matching) -> set[int]:
    """Vertices reachable as outer in a blossom search seeded at every exposed vertex.

    Only meaningful when m is maximum; the search raises if it stumbles on an
    augmenting event, which certifies the precondition as a side effect.
    """
    mate = dict(m.partner)
    roots = m.exposed()
    _, _, outer = _grow_forest(g, mate, roots, allow_augment=False)
    return outer


def enumerate_maximum_matchings(g: Graph) -> list[Matching]:
    """All maximum matchings, by branch-and-bound over the sorted edge list.

    Exponential in principle; guarded to MAX_ENUMERATION_EDGES edges.
    Completely independent of the blossom search, so it can act as its oracle.
    """
    edges = g.edges()
    if len(edges) > MAX_ENUMERATION_EDGES:
        raise OversizedEnumerationError(
            f"{len(edges)} edges exceeds the enumeration guard of {MAX_ENUMERATION_EDGES}"
        )
    best_size = 0
    found: list[list[tuple[int, int]]] = []
    chosen: list[tuple[int, int]] = []
    in_use: set[int] = set()
    n_vertices = g.vertex_count

    def walk(i: int) -> None:
        nonlocal best_size, found
        free = n_vertices - 2 * len(chosen)
        if len(chosen) + min(len(edges) - i, free // 2) < best_size:
            return
        if i == len(edges):
            if len(chosen) > best_size:
                best_size = len(chosen)
                found = [list(chosen)]
            elif len(chosen) == best_size:
                found.append(list(chosen))
            return
        u, w = edges[i]
        if u not in in_use and w not in in_use:
            chosen.append((u, w))
            in_use.add(u)
            in_use.add(w)
            walk(i + 1)
            chosen.pop()
            in_use.discard(u)
            in_use.discard(w)
        walk(i + 1)

    walk(0)
    matchings = []
    for pair_list in found:
        mate: dict[int, int | None] = {v: None for v in g.vertex_labels}
        for u, w in pair_list:
            mate[u] = w
            mate[w] = u
        matchings.append(Matching(partner=mate))
    return matchings
