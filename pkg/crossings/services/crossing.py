"""Crossing predicate on embedded edge pairs and the crossing count X."""

from typing import Sequence

import numpy as np

from crossings.errors import ContractViolation
from crossings.models import Embedding, Graph, Matching


def _check_embedding(g: Graph, emb: Embedding) -> None:
    if emb.n != g.n:
        raise ContractViolation(f"Embedding has {emb.n} slots, graph has {g.n} vertices")


def edges_cross(g: Graph, emb: Embedding, e: int, f: int) -> bool:
    """True iff edges e and f, embedded by emb, form a crossing (their slots alternate)."""
    _check_embedding(g, emb)
    for index in (e, f):
        if not 0 <= index < g.m:
            raise ContractViolation(f"Edge index {index} out of range for {g.m} edges")
    if e == f:
        raise ContractViolation(f"An edge cannot cross itself (edge {e})")
    if g.edges_share_vertex(e, f):
        raise ContractViolation(f"Edges {g.edges[e]} and {g.edges[f]} share a vertex")

    a, b = g.edges[e]
    c, d = g.edges[f]
    pos = emb.positions
    lo, hi = sorted((pos[a], pos[b]))
    return (lo < pos[c] < hi) != (lo < pos[d] < hi)


def count_crossings(g: Graph, emb: Embedding) -> int:
    """Number of 2-matchings of g embedded as crossings."""
    _check_embedding(g, emb)
    total = 0
    for e in range(g.m):
        for f in range(e + 1, g.m):
            if not g.edges_share_vertex(e, f) and edges_cross(g, emb, e, f):
                total += 1
    return total


def matching_endpoint_arrays(g: Graph, matchings: Sequence[Matching]) -> tuple[np.ndarray, ...]:
    """
    Endpoint arrays (a, b, c, d) for a list of 2-matchings: the first edge is
    (a[k], b[k]) and the second (c[k], d[k]), first edge = lower edge index.
    """
    if not matchings:
        empty = np.zeros(0, dtype=np.intp)
        return empty, empty, empty, empty
    rows = []
    for match in matchings:
        e, f = match.edge_indices
        rows.append(g.edges[e] + g.edges[f])
    arr = np.asarray(rows, dtype=np.intp)
    return arr[:, 0], arr[:, 1], arr[:, 2], arr[:, 3]
