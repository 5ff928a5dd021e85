"""analyze, exact and bound sub-commands."""

import argparse
import logging
from typing import Optional, Union

from crossings.commands.common import add_input_argument, emit, load_graph, positive_int
from crossings.config import EXACT_LIMIT, PAIR_CAP
from crossings.errors import DomainError
from crossings.models import Graph, MomentSummary
from crossings.schemas import (
    AnalysisDocument,
    BoundDocument,
    BoundOut,
    CensusOut,
    DegenerateOut,
    ExactDocument,
    GraphSummary,
    MatchingCountsOut,
    MomentsOut,
    PmfOut,
    RationalOut,
)
from crossings.services.bounds import VARIANTS, kolmogorov_bound, psi_variance_bound
from crossings.services.moments import exact_moments
from crossings.services.montecarlo import exact_distribution

logger = logging.getLogger(__name__)


def bound_section(g: Optional[Graph], summary: MomentSummary, variant: str) -> Union[BoundOut, DegenerateOut]:
    """Bound report, or a degenerate marker when sigma = 0."""
    try:
        report = kolmogorov_bound(g, summary, variant=variant)
        psi = psi_variance_bound(g, summary)
    except DomainError as e:
        logger.info("Bound skipped: %s", e)
        return DegenerateOut(reason=str(e))
    return BoundOut(
        variant=report.variant,
        m=report.m,
        max_degree=report.max_degree,
        m2=report.m2,
        m4=report.m4,
        sigma=report.sigma,
        a=report.a,
        radicand=report.radicand,
        psi_bound=report.psi_bound,
        psi_variance_bound=psi,
        kolmogorov_bound=report.kolmogorov_bound,
    )


def run_analyze(args: argparse.Namespace) -> int:
    g, digest = load_graph(args.path)
    report = exact_moments(g, cap=args.pair_cap)
    document = AnalysisDocument(
        input_digest=digest,
        graph=GraphSummary.of(g),
        matching_counts=MatchingCountsOut(
            m1=g.m,
            m2=report.m2,
            m3=report.m3,
            m4=report.m4,
        ),
        census=CensusOut.of(report.census),
        moments=MomentsOut.of(report),
        bound=bound_section(g, report, args.variant),
    )
    emit(document, as_csv=args.csv)
    return 0


def run_exact(args: argparse.Namespace) -> int:
    g, digest = load_graph(args.path)
    pmf = exact_distribution(g, limit=args.limit, workers=args.workers)
    document = ExactDocument(
        input_digest=digest,
        graph=GraphSummary.of(g),
        pmf=PmfOut.of(pmf),
        mean=RationalOut.of(pmf.mean()),
        variance=RationalOut.of(pmf.variance()),
    )
    emit(document)
    return 0


def run_bound(args: argparse.Namespace) -> int:
    g, digest = load_graph(args.path)
    report = exact_moments(g, cap=args.pair_cap)
    document = BoundDocument(
        input_digest=digest,
        graph=GraphSummary.of(g),
        moments=MomentsOut.of(report),
        bound=bound_section(g, report, args.variant),
    )
    emit(document)
    return 0


def _add_bound_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--pair-cap", type=positive_int, default=PAIR_CAP,
                        help="maximum ordered pairs of 2-matchings to classify")
    parser.add_argument("--variant", choices=VARIANTS, default="proof",
                        help="radicand of the Kolmogorov bound")


def register(subparsers) -> None:
    analyze = subparsers.add_parser("analyze", help="exact moments, census and bound of a graph")
    add_input_argument(analyze)
    _add_bound_options(analyze)
    analyze.add_argument("--csv", action="store_true", help="flat key,value table instead of JSON")
    analyze.set_defaults(func=run_analyze)

    exact = subparsers.add_parser("exact", help="exact law of the crossing count by enumeration")
    add_input_argument(exact)
    exact.add_argument("--limit", type=positive_int, default=EXACT_LIMIT,
                       help="largest vertex count to enumerate")
    exact.set_defaults(func=run_exact)

    bound = subparsers.add_parser("bound", help="Kolmogorov-distance bound of a graph")
    add_input_argument(bound)
    _add_bound_options(bound)
    bound.set_defaults(func=run_bound)
