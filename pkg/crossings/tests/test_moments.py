from fractions import Fraction

import pytest

from crossings.errors import CapacityError, DomainError
from crossings.models import FamilyKind, GraphFamily, PairClass, Trust
from crossings.services.matchings import classify_pair
from crossings.services.moments import (
    class_probability,
    closed_form_moments,
    exact_moments,
    representative,
    subgraph_second_moment,
    verify_class_probability,
)
from crossings.services.montecarlo import exact_distribution
from crossings.tests.helpers import complete, family, random_graphs


def closed(kind: str, n: int):
    return closed_form_moments(GraphFamily(FamilyKind(kind), n))


@pytest.mark.parametrize("c,p", [
    (PairClass.C1, Fraction(1, 9)),
    (PairClass.C4, Fraction(7, 60)),
    (PairClass.C8, Fraction(1, 3)),
    (PairClass.C9, Fraction(0)),
])
def test_class_probability_table(c, p):
    assert class_probability(c) == p


@pytest.mark.parametrize("c", list(PairClass))
def test_class_probabilities_by_enumeration(c):
    g, i, j = representative(c)
    assert classify_pair(g, i, j) is c
    assert verify_class_probability(c) == class_probability(c)


def test_five_cycle():
    report = exact_moments(family("cycle", 5))
    assert report.mean == Fraction(5, 3)
    assert report.second_moment == Fraction(25, 6)
    assert report.variance == Fraction(25, 18)


def test_pairing_four():
    report = exact_moments(family("pairing", 4))
    assert report.mean == 2
    assert report.variance == Fraction(28, 15)


def test_triangle_is_degenerate(k3):
    report = exact_moments(k3)
    assert report.mean == 0
    assert report.variance == 0
    assert report.m2 == 0


def test_census_cap_propagates():
    with pytest.raises(CapacityError):
        exact_moments(family("pairing", 6), cap=10)


def oracle_graphs():
    graphs = [family("path", n) for n in range(4, 9)]
    graphs += [family("cycle", n) for n in range(4, 9)]
    graphs += [family("pairing", n) for n in range(2, 5)]
    graphs += [family("triangles", n) for n in (1, 2)]
    graphs += [complete(4), complete(5)]
    graphs += [family("star_with_tail", n) for n in range(5, 9)]
    return graphs + random_graphs(50, 7, seed=2024)


@pytest.mark.parametrize("g", oracle_graphs())
def test_moments_match_enumeration(g):
    report = exact_moments(g)
    pmf = exact_distribution(g)
    assert report.mean == pmf.mean() == Fraction(report.m2, 3)
    assert report.variance == pmf.variance()
    assert report.variance >= 0


@pytest.mark.parametrize("g", random_graphs(30, 10, seed=5))
def test_subgraph_formula_matches_census(g):
    report = exact_moments(g)
    assert subgraph_second_moment(report.census) == report.second_moment


@pytest.mark.parametrize("n", range(2, 13))
def test_pairing_closed_form(n):
    cf = closed("pairing", n)
    report = exact_moments(family("pairing", n))
    assert cf.variance.value == report.variance == Fraction(n * (n - 1) * (n + 3), 45)
    assert cf.second_moment.value == report.second_moment
    assert cf.mean.value == report.mean


@pytest.mark.parametrize("n", range(5, 13))
def test_path_closed_form(n):
    cf = closed("path", n)
    report = exact_moments(family("path", n))
    assert cf.variance.trust is Trust.verified
    assert cf.variance.value == report.variance
    # printed second moment carries a typo
    assert cf.second_moment.trust is Trust.disputed
    assert cf.second_moment.value != report.second_moment
    assert cf.trusted().second_moment == report.second_moment


@pytest.mark.parametrize("n", range(5, 13))
def test_cycle_closed_form(n):
    cf = closed("cycle", n)
    report = exact_moments(family("cycle", n))
    assert cf.second_moment.trust is Trust.verified
    assert cf.second_moment.value == report.second_moment
    # printed variance has the sign of the n^2 term flipped
    assert cf.variance.trust is Trust.disputed
    assert cf.variance.value != report.variance
    assert report.variance == Fraction(n ** 3, 45) + Fraction(n ** 2, 90) - Fraction(n, 3)
    assert cf.trusted().variance == report.variance


@pytest.mark.parametrize("n", range(1, 9))
def test_triangles_closed_form(n):
    cf = closed("triangles", n)
    report = exact_moments(family("triangles", n))
    assert cf.variance.value == report.variance
    assert cf.second_moment.value == report.second_moment


@pytest.mark.parametrize("n", range(4, 13))
def test_star_with_tail_closed_form(n):
    cf = closed("star_with_tail", n)
    report = exact_moments(family("star_with_tail", n))
    assert report.mean == cf.mean.value == Fraction(n - 3, 3)
    assert report.second_moment == cf.second_moment.value == Fraction((n - 2) * (n - 3), 6)
    assert report.variance == cf.variance.value == Fraction(n * (n - 3), 18)


def test_closed_form_small_cases():
    assert closed("pairing", 2).second_moment.value == Fraction(1, 3)
    assert closed("path", 4).variance.value == Fraction(2, 9)


def test_closed_form_matching_counts():
    cf = closed("cycle", 9)
    report = exact_moments(family("cycle", 9))
    assert (cf.m2, cf.m3, cf.m4) == (report.m2, report.m3, report.m4)
    assert (cf.edge_count, cf.max_degree) == (9, 2)


@pytest.mark.parametrize("kind,n", [("path", 3), ("cycle", 4), ("star_with_tail", 3), ("pairing", 0)])
def test_closed_form_domain(kind, n):
    with pytest.raises(DomainError):
        closed(kind, n)
