"""Gallai-Edmonds partition V = D + A + C of a graph.

D holds the inessential vertices (missed by at least one maximum matching),
A the essential vertices with an inessential neighbor, C everything else.
Two routes are provided: a fast one that extracts D as the outer-vertex set
of a single blossom search over one maximum matching, and a naive one that
classifies every vertex by deletion.  They must always agree; the test suite
enforces it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .divgraph import Graph, induced_subgraph
from .matching import _grow_forest, maximum_matching, outer_vertices


@dataclass(frozen=True)
class Decomposition:
    """Sorted, disjoint vertex classes covering the whole graph."""

    d_set: tuple[int, ...]
    a_set: tuple[int, ...]
    c_set: tuple[int, ...]

    def label_of(self, v: int) -> str:
        if v in set(self.d_set):
            return "D"
        if v in set(self.a_set):
            return "A"
        return "C"


def is_inessential(g: Graph, v: int) -> bool:
    """True iff some maximum matching misses v, i.e. deleting v keeps nu unchanged."""
    g.require_vertex(v)
    nu = maximum_matching(g).size
    rest = induced_subgraph(g, set(g.vertex_labels) - {v})
    return maximum_matching(rest).size == nu


def _classify(g: Graph, inessential: set[int]) -> Decomposition:
    d = sorted(inessential)
    a = sorted(
        v
        for v in g.vertex_labels
        if v not in inessential and any(w in inessential for w in g.adjacency[v])
    )
    a_set = set(a)
    c = sorted(v for v in g.vertex_labels if v not in inessential and v not in a_set)
    return Decomposition(d_set=tuple(d), a_set=tuple(a), c_set=tuple(c))


def decompose(g: Graph) -> Decomposition:
    """Fast route: one maximum matching, one multi-seeded blossom search.

    D is exactly the set of outer vertices reachable from the exposed
    vertices; A and C then follow from the neighbor rules.
    """
    m = maximum_matching(g)
    return _classify(g, outer_vertices(g, m))


def decompose_naive(g: Graph) -> Decomposition:
    """Oracle route: per-vertex deletion against the definitions.

    v is inessential iff nu(g - v) = nu(g).  Deleting a matched v frees its
    partner, and any augmenting path of g - v must start there, so a single
    search phase from the partner settles each vertex.
    """
    m = maximum_matching(g)
    inessential: set[int] = set()
    for v in g.vertex_labels:
        w = m.partner[v]
        if w is None:
            # m itself is a maximum matching of g - v of full size.
            inessential.add(v)
            continue
        mate = dict(m.partner)
        mate[v] = None
        mate[w] = None
        end, _, _ = _grow_forest(g, mate, [w], skip=v)
        if end is not None:
            inessential.add(v)
    return _classify(g, inessential)


def decomposition_doc(n: int, dec: Decomposition) -> dict:
    """The wire shape used by CLI output, HTTP responses and files."""
    return {"n": n, "d": list(dec.d_set), "a": list(dec.a_set), "c": list(dec.c_set)}


def decomposition_json(n: int, dec: Decomposition) -> str:
    return json.dumps(decomposition_doc(n, dec))
