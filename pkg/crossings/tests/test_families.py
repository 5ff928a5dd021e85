import pytest

from crossings.errors import DomainError
from crossings.models import FamilyKind, GraphFamily
from crossings.services.families import family_matching_counts, family_shape, make_family
from crossings.services.matchings import count_matchings
from crossings.tests.helpers import complete, family


def test_path_four():
    g = family("path", 4)
    assert g.n == 4
    assert g.edges == ((0, 1), (1, 2), (2, 3))


def test_star_with_tail_six():
    g = family("star_with_tail", 6)
    assert g.m == 5
    assert count_matchings(g, 2) == 3
    assert (4, 5) in g.edges
    assert g.degree(0) == 4


def test_cycle_three_is_a_triangle():
    assert sorted(family("cycle", 3).edges) == sorted(complete(3).edges)


def test_disjoint_unions():
    pairing = family("pairing", 3)
    assert (pairing.n, pairing.m, pairing.max_degree) == (6, 3, 1)
    triangles = family("triangles", 2)
    assert (triangles.n, triangles.m, triangles.max_degree) == (6, 6, 2)


@pytest.mark.parametrize("kind,n", [("pairing", 0), ("path", 0), ("cycle", 2), ("triangles", 0),
                                    ("star_with_tail", 3)])
def test_size_out_of_range(kind, n):
    with pytest.raises(DomainError):
        make_family(GraphFamily(FamilyKind(kind), n))


@pytest.mark.parametrize("kind", list(FamilyKind))
def test_shape_and_counts_match_the_graph(kind):
    for n in range(4, 11):
        f = GraphFamily(kind, n)
        g = make_family(f)
        assert family_shape(f) == (g.m, g.max_degree)
        assert family_matching_counts(f) == tuple(count_matchings(g, r) for r in (2, 3, 4))
