from math import comb

import networkx as nx
import pytest

from crossings.errors import CapacityError, ContractViolation, DomainError
from crossings.models import FamilyKind, GraphFamily, Matching, PairClass
from crossings.services.families import family_matching_count, family_pair_counts
from crossings.services.graph_parser import graph_from_networkx
from crossings.services.matchings import (
    classify_pair,
    count_matchings,
    enumerate_matchings,
    matching_polynomial,
    pair_census,
)
from crossings.tests.helpers import complete, family, random_graphs


def test_enumeration_is_lexicographic():
    g = family("path", 5)  # edges 0:(0,1) 1:(1,2) 2:(2,3) 3:(3,4)
    assert list(enumerate_matchings(g, 2)) == [Matching((0, 2)), Matching((0, 3)), Matching((1, 3))]


def test_enumeration_beyond_matching_number_is_empty():
    assert list(enumerate_matchings(complete(3), 2)) == []


def test_r_must_be_positive(path4):
    with pytest.raises(DomainError):
        list(enumerate_matchings(path4, 0))
    with pytest.raises(DomainError):
        count_matchings(path4, 0)


def test_enumeration_cap():
    with pytest.raises(CapacityError) as exc:
        list(enumerate_matchings(complete(5), 2, cap=3))
    assert exc.value.cap == 3


def test_counting_cap():
    with pytest.raises(CapacityError):
        count_matchings(family("cycle", 8), 3, cap=1)


@pytest.mark.parametrize("g", random_graphs(20, 8, seed=100))
def test_counts_match_enumeration(g):
    for r in range(1, 5):
        assert count_matchings(g, r) == len(list(enumerate_matchings(g, r)))


def test_matching_polynomial_of_hexagon():
    assert matching_polynomial(family("cycle", 6), 4) == [1, 6, 9, 2, 0]


def test_matching_polynomial_factors_over_components():
    # three disjoint triangles: (1 + 3x)^3
    assert matching_polynomial(family("triangles", 3), 4) == [1, 9, 27, 27, 0]
    union = graph_from_networkx(nx.disjoint_union(nx.cycle_graph(6), nx.path_graph(4)))
    # (1 + 6x + 9x^2 + 2x^3)(1 + 3x + x^2)
    assert matching_polynomial(union, 5) == [1, 9, 28, 35, 15, 2]


def test_matching_polynomial_of_petersen():
    g = graph_from_networkx(nx.petersen_graph())
    assert matching_polynomial(g, 5) == [1, 15, 75, 145, 90, 6]


@pytest.mark.parametrize("kind,sizes", [
    ("pairing", range(1, 8)),
    ("path", range(1, 12)),
    ("cycle", range(3, 12)),
    ("triangles", range(1, 5)),
    ("star_with_tail", range(4, 10)),
])
def test_family_matching_counts(kind, sizes):
    for n in sizes:
        g = family(kind, n)
        for r in (1, 2, 3, 4):
            assert count_matchings(g, r) == family_matching_count(GraphFamily(FamilyKind(kind), n), r), (n, r)


def test_classify_rejects_non_matchings(path4):
    with pytest.raises(ContractViolation):
        classify_pair(path4, Matching((0, 1)), Matching((0, 2)))
    with pytest.raises(ContractViolation):
        classify_pair(path4, Matching((0,)), Matching((0, 2)))


def test_classify_four_cycle():
    g = family("cycle", 4)  # edges (0,1) (0,3) (1,2) (2,3)
    i, j = list(enumerate_matchings(g, 2))
    assert classify_pair(g, i, j) is PairClass.C9
    assert classify_pair(g, i, i) is PairClass.C8


def test_census_of_four_cycle():
    census = pair_census(family("cycle", 4))
    assert census.counts[PairClass.C9] == 2
    assert census.counts[PairClass.C8] == 2
    assert census.total == 4


def test_census_of_pairing_four():
    census = pair_census(family("pairing", 4))
    assert census.m2 == 6
    assert census.m3 == 4
    assert census.m4 == 1
    assert census.counts[PairClass.C1] == 6
    assert census.counts[PairClass.C3] == 24


@pytest.mark.parametrize("g", random_graphs(15, 9, seed=7))
def test_census_matches_scalar_classification(g):
    census = pair_census(g)
    matchings = list(enumerate_matchings(g, 2))
    expected = {c: 0 for c in PairClass}
    for i in matchings:
        for j in matchings:
            expected[classify_pair(g, i, j)] += 1
    assert census.counts == expected
    assert census.m3 == count_matchings(g, 3)
    assert census.m4 == count_matchings(g, 4)


def test_census_cap():
    g = family("pairing", 10)  # m2 = 45
    with pytest.raises(CapacityError) as exc:
        pair_census(g, cap=2000)
    assert exc.value.required == 45 * 45


@pytest.mark.parametrize("kind,sizes", [
    ("pairing", range(1, 6)),
    ("path", range(4, 10)),
    ("cycle", range(5, 10)),
    ("triangles", range(1, 4)),
    ("star_with_tail", range(4, 9)),
])
def test_printed_subgraph_counts(kind, sizes):
    for n in sizes:
        census = pair_census(family(kind, n))
        got = {"s2": census.s2, "s4": census.s4, "s5": census.s5, "s6": census.s6, "s7": census.s7}
        assert got == family_pair_counts(GraphFamily(FamilyKind(kind), n)), n


def test_pairs_of_triangles():
    # no two edges of one triangle are disjoint
    assert pair_census(family("triangles", 3)).m2 == 9 * comb(3, 2)


@pytest.mark.parametrize("g", random_graphs(10, 9, seed=31))
def test_classification_is_symmetric(g):
    matchings = list(enumerate_matchings(g, 2))
    for i in matchings:
        for j in matchings:
            assert classify_pair(g, i, j) is classify_pair(g, j, i)
