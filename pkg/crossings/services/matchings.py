"""r-matchings: enumeration, counting, and the census of ordered pairs of 2-matchings."""

import logging
from math import comb
from typing import Iterator

import networkx as nx
import numpy as np

from crossings.config import ENUMERATION_CAP, PAIR_CAP
from crossings.errors import CapacityError, ContractViolation, DomainError
from crossings.models import Graph, Matching, PairCensus, PairClass

logger = logging.getLogger(__name__)

CLASS_ORDER = list(PairClass)


def enumerate_matchings(g: Graph, r: int, cap: int = ENUMERATION_CAP) -> Iterator[Matching]:
    """Yield every r-matching once, in lexicographic order of edge-index sequences."""
    if r < 1:
        raise DomainError(f"r must be positive, got {r}")
    edges = g.edges
    m = len(edges)
    chosen: list[int] = []
    used: set[int] = set()
    yielded = 0

    def extend(start: int) -> Iterator[Matching]:
        nonlocal yielded
        if len(chosen) == r:
            yielded += 1
            if yielded > cap:
                raise CapacityError("enumeration cap", cap)
            yield Matching(tuple(chosen))
            return
        for e in range(start, m - (r - len(chosen)) + 1):
            u, v = edges[e]
            if u in used or v in used:
                continue
            chosen.append(e)
            used.update((u, v))
            yield from extend(e + 1)
            used.difference_update((u, v))
            chosen.pop()

    if r <= m:
        yield from extend(0)


def count_matchings(g: Graph, r: int, cap: int = ENUMERATION_CAP) -> int:
    """m_r(G) without materializing the matchings."""
    if r < 1:
        raise DomainError(f"r must be positive, got {r}")
    if r == 1:
        return g.m
    if r == 2:
        # in a simple graph two distinct edges meet in at most one vertex
        return comb(g.m, 2) - sum(comb(len(nbrs), 2) for nbrs in g.adjacency)
    return matching_polynomial(g, r, cap)[r]


def matching_polynomial(g: Graph, degree: int, cap: int = ENUMERATION_CAP) -> list[int]:
    """
    Coefficients [m_0, ..., m_degree] of the matching generating polynomial.

    Uses M(G) = M(G - v) + x * sum_{w ~ v} M(G - v - w), factorizing over
    connected components and memoizing on the remaining edge set. The pivot
    is a maximum-degree vertex, the median one among ties, so paths and
    cycles split in halves.
    """
    unit = (1,) + (0,) * degree
    memo: dict[frozenset, tuple[int, ...]] = {}
    visits = 0

    def add(p, q):
        return tuple(x + y for x, y in zip(p, q))

    def shift(p):
        return (0,) + p[:-1]

    def mul(p, q):
        out = [0] * (degree + 1)
        for i, x in enumerate(p):
            if x:
                for j in range(degree + 1 - i):
                    out[i + j] += x * q[j]
        return tuple(out)

    def poly(edges: frozenset) -> tuple[int, ...]:
        nonlocal visits
        if not edges:
            return unit
        cached = memo.get(edges)
        if cached is not None:
            return cached
        visits += 1
        if visits > cap:
            raise CapacityError("matching count cap", cap)

        sub = nx.Graph(edges)
        components = list(nx.connected_components(sub))
        if len(components) > 1:
            result = unit
            for nodes in components:
                result = mul(result, poly(frozenset(e for e in edges if e[0] in nodes)))
        else:
            top = max(d for _, d in sub.degree())
            tied = sorted(v for v, d in sub.degree() if d == top)
            pivot = tied[len(tied) // 2]
            without = frozenset(e for e in edges if pivot not in e)
            result = poly(without)
            for w in sorted(sub[pivot]):
                rest = frozenset(e for e in without if w not in e)
                result = add(result, shift(poly(rest)))

        memo[edges] = result
        return result

    coefficients = list(poly(frozenset(g.edges)))
    logger.debug("Matching polynomial to degree %d: %d subproblems", degree, visits)
    return coefficients


def _check_two_matching(g: Graph, match: Matching) -> None:
    if match.size != 2:
        raise ContractViolation(f"{match} is not a 2-matching")
    e, f = match.edge_indices
    if not 0 <= e < f < g.m:
        raise ContractViolation(f"{match} does not hold increasing edge indices of the graph")
    if g.edges_share_vertex(e, f):
        raise ContractViolation(f"{match} holds edges sharing a vertex")


def classify_pair(g: Graph, i: Matching, j: Matching) -> PairClass:
    """Pair class of two 2-matchings from their shared edges and shared vertices."""
    _check_two_matching(g, i)
    _check_two_matching(g, j)

    shared_edges = set(i.edge_indices) & set(j.edge_indices)
    if len(shared_edges) == 2:
        return PairClass.C8

    vi = [v for e in i.edge_indices for v in g.edges[e]]
    vj = [v for e in j.edge_indices for v in g.edges[e]]
    shared = set(vi) & set(vj)

    if len(shared_edges) == 1:
        (common,) = shared_edges
        (ei,) = [e for e in i.edge_indices if e != common]
        (ej,) = [e for e in j.edge_indices if e != common]
        return PairClass.C7 if g.edges_share_vertex(ei, ej) else PairClass.C3

    if not shared:
        return PairClass.C1
    if len(shared) == 1:
        return PairClass.C2
    if len(shared) == 2:
        edges = [g.edges[e] for e in i.edge_indices + j.edge_indices]
        if any(set(edge) == shared for edge in edges):
            return PairClass.C5
        return PairClass.C4
    if len(shared) == 3:
        return PairClass.C6
    return PairClass.C9


def pair_census(g: Graph, cap: int = PAIR_CAP, enumeration_cap: int = ENUMERATION_CAP) -> PairCensus:
    """
    Count ordered pairs (i, j) of 2-matchings per class.

    M2(G) is materialized once; each row i is classified against all j with
    vectorized comparisons, so memory stays O(m2).
    """
    m2 = count_matchings(g, 2)
    if m2 * m2 > cap:
        raise CapacityError("pair cap", cap, m2 * m2)
    logger.info("Pair census: %d two-matchings, %d ordered pairs", m2, m2 * m2)

    counts = [0] * len(CLASS_ORDER)
    if m2:
        matchings = list(enumerate_matchings(g, 2, enumeration_cap))
        edge_idx = np.asarray([m.edge_indices for m in matchings], dtype=np.intp)
        edges = np.asarray(g.edges, dtype=np.intp)
        verts = edges[edge_idx].reshape(m2, 4)

        for row in range(m2):
            counts_row = _classify_row(edge_idx, verts, row)
            for k, c in enumerate(counts_row):
                counts[k] += int(c)

    census = PairCensus(counts={cls: counts[k] for k, cls in enumerate(CLASS_ORDER)}, m2=m2)
    census.check()
    return census


def _classify_row(edge_idx: np.ndarray, verts: np.ndarray, row: int) -> np.ndarray:
    """Per-class counts of pairs (row, j) for all j; classes indexed as CLASS_ORDER."""
    shared_edges = (edge_idx[:, :, None] == edge_idx[row][None, None, :]).sum(axis=(1, 2))
    # which vertices of j lie in V(row), and which vertices of row lie in V(j)
    j_in_i = (verts[:, :, None] == verts[row][None, None, :]).any(axis=2)
    i_in_j = (verts[row][None, :, None] == verts[:, None, :]).any(axis=2)
    shared_vertices = j_in_i.sum(axis=1)
    edge_holds_both = (
        (j_in_i[:, 0] & j_in_i[:, 1]) | (j_in_i[:, 2] & j_in_i[:, 3])
        | (i_in_j[:, 0] & i_in_j[:, 1]) | (i_in_j[:, 2] & i_in_j[:, 3])
    )

    code = np.empty(len(edge_idx), dtype=np.intp)
    se0 = shared_edges == 0
    code[shared_edges == 2] = 7                                        # C8
    code[(shared_edges == 1) & (shared_vertices == 2)] = 2             # C3
    code[(shared_edges == 1) & (shared_vertices == 3)] = 6             # C7
    code[se0 & (shared_vertices == 0)] = 0                             # C1
    code[se0 & (shared_vertices == 1)] = 1                             # C2
    code[se0 & (shared_vertices == 2) & edge_holds_both] = 4           # C5
    code[se0 & (shared_vertices == 2) & ~edge_holds_both] = 3          # C4
    code[se0 & (shared_vertices == 3)] = 5                             # C6
    code[se0 & (shared_vertices == 4)] = 8                             # C9
    return np.bincount(code, minlength=len(CLASS_ORDER))
