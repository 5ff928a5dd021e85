"""simulate sub-command."""

import argparse
from math import sqrt

from crossings.commands.common import add_input_argument, emit, load_graph, positive_int
from crossings.config import PAIR_CAP
from crossings.schemas import (
    CouplingOut,
    GraphSummary,
    MomentsOut,
    PmfOut,
    SimulationDocument,
    StandardizationOut,
)
from crossings.services.moments import exact_moments
from crossings.services.montecarlo import coupling_statistics, empirical_distribution
from crossings.utils.normal import ks_distance_to_normal
from crossings.utils.rational import decimal_str


def run_simulate(args: argparse.Namespace) -> int:
    g, digest = load_graph(args.path)
    pmf = empirical_distribution(g, args.samples, args.seed, workers=args.workers)
    mean = pmf.mean()
    variance = max(pmf.variance(), 0.0)

    exact = None
    if args.exact:
        exact = exact_moments(g, cap=args.pair_cap)
        center, sigma = float(exact.mean), sqrt(exact.variance)
    else:
        center, sigma = mean, sqrt(variance)
    ks = ks_distance_to_normal(pmf, center, sigma) if sigma > 0 else None

    coupling = None
    if args.coupling:
        coupling = CouplingOut.of(coupling_statistics(g, args.samples, args.seed, workers=args.workers))

    document = SimulationDocument(
        input_digest=digest,
        graph=GraphSummary.of(g),
        samples=args.samples,
        seed=args.seed,
        pmf=PmfOut.of(pmf),
        mean=decimal_str(mean),
        variance=decimal_str(variance),
        standardization=StandardizationOut(
            source="exact" if args.exact else "empirical",
            mean=decimal_str(center),
            sigma=decimal_str(sigma),
        ),
        ks_distance=None if ks is None else decimal_str(ks),
        exact_moments=None if exact is None else MomentsOut.of(exact),
        coupling=coupling,
    )
    emit(document)
    return 0


def register(subparsers) -> None:
    simulate = subparsers.add_parser("simulate", help="Monte Carlo law of the crossing count")
    add_input_argument(simulate)
    simulate.add_argument("--samples", type=positive_int, default=100_000)
    simulate.add_argument("--seed", type=int, default=0)
    simulate.add_argument("--exact", action="store_true",
                          help="standardize with the exact mean and variance")
    simulate.add_argument("--coupling", action="store_true",
                          help="also run the size-bias coupling and summarize |X^s - X|")
    simulate.add_argument("--pair-cap", type=positive_int, default=PAIR_CAP,
                          help="census cap for --exact")
    simulate.set_defaults(func=run_simulate)
