"""Self-checks: every closed form and table against brute-force enumeration."""

import logging
from fractions import Fraction

import networkx as nx

from crossings.models import CheckResult, FamilyKind, Graph, GraphFamily, PairClass, Trust
from crossings.services.families import make_family
from crossings.services.graph_parser import graph_from_networkx
from crossings.services.moments import (
    class_probability,
    closed_form_moments,
    exact_moments,
    subgraph_second_moment,
    verify_class_probability,
)
from crossings.services.montecarlo import exact_distribution, size_bias_exact_law, star_tail_pmf

logger = logging.getLogger(__name__)


def _family(kind: FamilyKind, n: int) -> Graph:
    return make_family(GraphFamily(kind, n))


def oracle_graphs() -> dict[str, Graph]:
    """Small graphs whose exact law is enumerated by the moment check."""
    graphs = {}
    for n in (4, 5, 6):
        graphs[f"path({n})"] = _family(FamilyKind.path, n)
        graphs[f"cycle({n})"] = _family(FamilyKind.cycle, n)
    for n in (2, 3):
        graphs[f"pairing({n})"] = _family(FamilyKind.pairing, n)
    graphs["triangles(2)"] = _family(FamilyKind.triangles, 2)
    graphs["K4"] = graph_from_networkx(nx.complete_graph(4))
    graphs["K5"] = graph_from_networkx(nx.complete_graph(5))
    for n in (5, 6):
        graphs[f"star_with_tail({n})"] = _family(FamilyKind.star_with_tail, n)
    return graphs


def check_class_probabilities() -> list[CheckResult]:
    results = []
    for c in PairClass:
        got = verify_class_probability(c)
        want = class_probability(c)
        results.append(CheckResult(f"class probability {c.value}", got == want, f"{got} (table {want})"))
    return results


def check_moments() -> list[CheckResult]:
    results = []
    for name, g in oracle_graphs().items():
        report = exact_moments(g)
        pmf = exact_distribution(g)
        passed = (
            report.mean == pmf.mean()
            and report.variance == pmf.variance()
            and subgraph_second_moment(report.census) == report.second_moment
        )
        results.append(CheckResult(f"moments {name}", passed, f"mean {report.mean}, variance {report.variance}"))
    return results


def check_size_bias() -> list[CheckResult]:
    graphs = {
        "path(5)": _family(FamilyKind.path, 5),
        "cycle(5)": _family(FamilyKind.cycle, 5),
        "pairing(3)": _family(FamilyKind.pairing, 3),
        "star_with_tail(6)": _family(FamilyKind.star_with_tail, 6),
    }
    results = []
    for name, g in graphs.items():
        law = exact_distribution(g).probabilities
        biased = size_bias_exact_law(g).probabilities
        mean = sum(k * p for k, p in law.items())
        passed = all(mean * biased.get(k, 0) == k * p for k, p in law.items()) and set(biased) <= set(law)
        results.append(CheckResult(f"size-bias law {name}", passed, f"mean {mean}"))
    return results


def check_star_tail() -> list[CheckResult]:
    results = []
    for n in range(5, 9):
        exact = exact_distribution(_family(FamilyKind.star_with_tail, n)).atoms()
        closed = star_tail_pmf(n).atoms()
        results.append(CheckResult(f"star_with_tail pmf n={n}", exact == closed, f"P(X=0) = {closed.get(0)}"))
    return results


def check_closed_forms() -> list[CheckResult]:
    """VERIFIED closed forms must agree with the census; DISPUTED ones must not."""
    cases = [(FamilyKind.pairing, n) for n in (2, 3, 4)]
    cases += [(FamilyKind.path, n) for n in (5, 6)]
    cases += [(FamilyKind.cycle, n) for n in (5, 6)]
    cases += [(FamilyKind.triangles, n) for n in (1, 2)]
    cases += [(FamilyKind.star_with_tail, n) for n in (4, 6)]
    results = []
    for kind, n in cases:
        closed = closed_form_moments(GraphFamily(kind, n))
        report = exact_moments(_family(kind, n))
        mismatches = []
        for field, value in (
            ("mean", closed.mean),
            ("second moment", closed.second_moment),
            ("variance", closed.variance),
        ):
            exact: Fraction = getattr(report, field.replace(" ", "_"))
            if (value.value == exact) != (value.trust is Trust.verified):
                mismatches.append(f"{field} {value.value} ({value.trust.value}) vs {exact}")
        results.append(
            CheckResult(f"closed forms {kind.value}({n})", not mismatches, "; ".join(mismatches) or "consistent")
        )
    return results


def run_checks() -> list[CheckResult]:
    results = (
        check_class_probabilities()
        + check_moments()
        + check_size_bias()
        + check_star_tail()
        + check_closed_forms()
    )
    for result in results:
        if not result.passed:
            logger.warning("Check failed: %s: %s", result.name, result.detail)
    logger.info("%d of %d checks passed", sum(r.passed for r in results), len(results))
    return results
