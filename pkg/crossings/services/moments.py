"""Exact mean, second moment and variance of the crossing count."""

import logging
from fractions import Fraction
from math import comb, factorial

from crossings.config import PAIR_CAP
from crossings.errors import ContractViolation, DomainError
from crossings.models import (
    ClosedFormMoments,
    FamilyKind,
    Graph,
    GraphFamily,
    Matching,
    MomentReport,
    PairCensus,
    PairClass,
    Trust,
    TrustedValue,
)
from crossings.services.families import check_family, family_matching_counts, family_shape
from crossings.services.matchings import classify_pair, pair_census
from crossings.utils.permutations import crossing_mask, permutation_blocks

logger = logging.getLogger(__name__)

# P(both 2-matchings of the pair cross) under a uniform embedding
CLASS_PROBABILITY = {
    PairClass.C1: Fraction(1, 9),
    PairClass.C2: Fraction(1, 9),
    PairClass.C3: Fraction(2, 15),
    PairClass.C4: Fraction(7, 60),
    PairClass.C5: Fraction(1, 10),
    PairClass.C6: Fraction(1, 12),
    PairClass.C7: Fraction(1, 6),
    PairClass.C8: Fraction(1, 3),
    PairClass.C9: Fraction(0),
}

# Smallest graph realizing each class: (vertex count, edges of i, edges of j)
REPRESENTATIVES = {
    PairClass.C1: (8, ((0, 1), (2, 3)), ((4, 5), (6, 7))),
    PairClass.C2: (7, ((0, 1), (2, 3)), ((1, 4), (5, 6))),
    PairClass.C3: (6, ((0, 1), (2, 3)), ((0, 1), (4, 5))),
    PairClass.C4: (6, ((0, 1), (2, 3)), ((1, 4), (3, 5))),
    PairClass.C5: (6, ((1, 2), (4, 5)), ((0, 1), (2, 3))),
    PairClass.C6: (5, ((0, 1), (2, 3)), ((1, 2), (3, 4))),
    PairClass.C7: (5, ((0, 1), (2, 3)), ((0, 1), (3, 4))),
    PairClass.C8: (4, ((0, 1), (2, 3)), ((0, 1), (2, 3))),
    PairClass.C9: (4, ((0, 1), (2, 3)), ((1, 2), (0, 3))),
}


def class_probability(c: PairClass) -> Fraction:
    return CLASS_PROBABILITY[c]


def representative(c: PairClass) -> tuple[Graph, Matching, Matching]:
    """The canonical subgraph of class c with its two 2-matchings."""
    n, edges_i, edges_j = REPRESENTATIVES[c]
    edges = sorted(set(edges_i) | set(edges_j))
    g = Graph(n=n, edges=tuple(edges))
    i = Matching(tuple(sorted(edges.index(e) for e in edges_i)))
    j = Matching(tuple(sorted(edges.index(e) for e in edges_j)))
    return g, i, j


def verify_class_probability(c: PairClass) -> Fraction:
    """
    P(both cross) for class c by enumerating every ordering of the
    representative's vertices.
    """
    g, i, j = representative(c)
    if classify_pair(g, i, j) is not c:
        raise ContractViolation(f"Representative of {c.value} classifies as {classify_pair(g, i, j).value}")

    ends = []
    for match in (i, j):
        (a, b), (cc, d) = (g.edges[e] for e in match.edge_indices)
        ends.append(([a], [b], [cc], [d]))

    hits = 0
    for block in permutation_blocks(g.n):
        both = crossing_mask(block, *ends[0])[:, 0] & crossing_mask(block, *ends[1])[:, 0]
        hits += int(both.sum())
    return Fraction(hits, factorial(g.n))


def second_moment_from_census(census: PairCensus) -> Fraction:
    return sum((count * CLASS_PROBABILITY[cls] for cls, count in census.counts.items()), Fraction(0))


def subgraph_second_moment(census: PairCensus) -> Fraction:
    """E[X^2] written in matching counts and subgraph counts S_i."""
    return (
        Fraction(6, 9) * census.m4
        + Fraction(4, 5) * census.m3
        + Fraction(1, 3) * census.m2
        + Fraction(4, 9) * census.s2
        + Fraction(7, 15) * census.s4
        + Fraction(1, 5) * census.s5
        + Fraction(1, 6) * census.s6
        + Fraction(1, 3) * census.s7
    )


def exact_moments(g: Graph, cap: int = PAIR_CAP) -> MomentReport:
    """
    Exact rational mean, second moment and variance of X.

    E[X^2] is the inner product of the pair census with the class
    probabilities; 4-cycle pairs (C9) contribute nothing.
    """
    census = pair_census(g, cap=cap)
    mean = Fraction(census.m2, 3)
    second = second_moment_from_census(census)
    variance = second - mean * mean
    if variance < 0:
        raise ContractViolation(f"Negative variance {variance}")
    logger.info("Exact moments: m2=%d mean=%s variance=%s", census.m2, mean, variance)
    return MomentReport(
        mean=mean,
        second_moment=second,
        variance=variance,
        m2=census.m2,
        m3=census.m3,
        m4=census.m4,
        edge_count=g.m,
        max_degree=g.max_degree,
        census=census,
    )


def closed_form_moments(f: GraphFamily) -> ClosedFormMoments:
    """
    Printed closed forms for a family evaluated at n.

    Path E[X^2] and cycle variance are flagged DISPUTED: their printed
    polynomials disagree with the enumeration-backed siblings. Path needs
    n >= 4 and cycle n >= 5 for the polynomials to apply.
    """
    n = Fraction(f.size)
    verified, disputed = Trust.verified, Trust.disputed

    if f.kind is FamilyKind.pairing:
        check_family(f)
        mean = n * (n - 1) / 6
        second = (n**4 / 36 - n**3 / 30 + 13 * n**2 / 180 - n / 15, verified)
        variance = (n * (n - 1) * (n + 3) / 45, verified)
    elif f.kind is FamilyKind.path:
        check_family(f, 4)
        mean = Fraction(comb(f.size - 2, 2), 3)
        second = (n**4 / 36 - 23 * n**3 / 90 + 35 * n**2 / 36 - 86 * n / 45 - Fraction(5, 3), disputed)
        variance = (n**3 / 45 - n**2 / 18 - 11 * n / 45 + Fraction(2, 3), verified)
    elif f.kind is FamilyKind.cycle:
        check_family(f, 5)
        mean = n * (n - 3) / 6
        second = (n**4 / 36 - 13 * n**3 / 90 + 47 * n**2 / 180 - n / 3, verified)
        variance = (n**3 / 45 - n**2 / 90 - n / 3, disputed)
    elif f.kind is FamilyKind.triangles:
        check_family(f)
        mean = 3 * n * (n - 1) / 2
        second = (9 * n**4 / 4 - 39 * n**3 / 10 + 51 * n**2 / 20 - 9 * n / 10, verified)
        variance = (3 * n**3 / 5 + 3 * n**2 / 10 - 9 * n / 10, verified)
    elif f.kind is FamilyKind.star_with_tail:
        check_family(f)
        mean = (n - 3) / 3
        second = ((n - 2) * (n - 3) / 6, verified)
        variance = (n * (n - 3) / 18, verified)
    else:
        raise DomainError(f"Unknown family {f.kind}")

    m2, m3, m4 = family_matching_counts(f)
    edge_count, max_degree = family_shape(f)
    return ClosedFormMoments(
        family=f,
        mean=TrustedValue(Fraction(mean), verified),
        second_moment=TrustedValue(*second),
        variance=TrustedValue(*variance),
        m2=m2,
        m3=m3,
        m4=m4,
        edge_count=edge_count,
        max_degree=max_degree,
    )
