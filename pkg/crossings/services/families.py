"""Named graph families and their closed-form matching and subgraph counts."""

from math import comb
from typing import Optional

import networkx as nx

from crossings.errors import DomainError
from crossings.models import FamilyKind, Graph, GraphFamily
from crossings.services.graph_parser import graph_from_networkx

MIN_SIZE = {
    FamilyKind.pairing: 1,
    FamilyKind.path: 1,
    FamilyKind.cycle: 3,
    FamilyKind.triangles: 1,
    FamilyKind.star_with_tail: 4,
}


def check_family(f: GraphFamily, minimum: Optional[int] = None) -> None:
    lowest = MIN_SIZE[f.kind] if minimum is None else minimum
    if f.size < lowest:
        raise DomainError(f"{f.kind.value} needs n >= {lowest}, got {f.size}")


def make_family(f: GraphFamily) -> Graph:
    """
    Build a member of a named family.

    star_with_tail(n): vertices 0..n-1, edges (0, i) for i = 1..n-2 plus the
    tail (n-2, n-1).
    """
    check_family(f)
    n = f.size
    if f.kind is FamilyKind.pairing:
        nx_graph = nx.disjoint_union_all([nx.complete_graph(2) for _ in range(n)])
    elif f.kind is FamilyKind.path:
        nx_graph = nx.path_graph(n)
    elif f.kind is FamilyKind.cycle:
        nx_graph = nx.cycle_graph(n)
    elif f.kind is FamilyKind.triangles:
        nx_graph = nx.disjoint_union_all([nx.complete_graph(3) for _ in range(n)])
    else:
        nx_graph = nx.star_graph(n - 2)
        nx_graph.add_edge(n - 2, n - 1)
    return graph_from_networkx(nx_graph)


def family_shape(f: GraphFamily) -> tuple[int, int]:
    """(edge count m, max degree) of a family member."""
    check_family(f)
    n = f.size
    if f.kind is FamilyKind.pairing:
        return n, 1
    if f.kind is FamilyKind.path:
        return n - 1, min(2, n - 1)
    if f.kind is FamilyKind.cycle:
        return n, 2
    if f.kind is FamilyKind.triangles:
        return 3 * n, 2
    return n - 1, n - 2


def family_matching_count(f: GraphFamily, r: int) -> int:
    """m_r from the family's closed form."""
    check_family(f)
    n = f.size
    if f.kind is FamilyKind.pairing:
        return comb(n, r)
    if f.kind is FamilyKind.path:
        return comb(n - r, r) if n >= r else 0
    if f.kind is FamilyKind.cycle:
        if r == 1:
            return n
        # n/r * C(n-r-1, r-1) is always an integer
        return n * comb(n - r - 1, r - 1) // r if n - r - 1 >= 0 else 0
    if f.kind is FamilyKind.triangles:
        return 3 ** r * comb(n, r)
    return {1: n - 1, 2: n - 3}.get(r, 0)


def family_matching_counts(f: GraphFamily) -> tuple[int, int, int]:
    return tuple(family_matching_count(f, r) for r in (2, 3, 4))


def family_pair_counts(f: GraphFamily) -> dict[str, int]:
    """Printed subgraph counts S2, S4..S7 (path needs n >= 4, cycle n >= 5)."""
    n = f.size
    if f.kind is FamilyKind.pairing:
        check_family(f)
        return {"s2": 0, "s4": 0, "s5": 0, "s6": 0, "s7": 0}
    if f.kind is FamilyKind.path:
        check_family(f, 4)
        return {"s2": 3 * comb(n - 4, 3), "s4": comb(n - 4, 2), "s5": 2 * comb(n - 4, 2),
                "s6": n - 4, "s7": 2 * comb(n - 3, 2)}
    if f.kind is FamilyKind.cycle:
        check_family(f, 5)
        return {"s2": n * comb(n - 5, 2), "s4": n * (n - 5) // 2, "s5": n * (n - 5),
                "s6": n, "s7": n * (n - 4)}
    if f.kind is FamilyKind.triangles:
        check_family(f)
        return {"s2": 81 * comb(n, 3), "s4": 9 * comb(n, 2), "s5": 0, "s6": 0,
                "s7": 18 * comb(n, 2)}
    check_family(f)
    return {"s2": 0, "s4": 0, "s5": 0, "s6": 0, "s7": comb(n - 3, 2)}
