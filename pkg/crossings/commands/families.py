"""family and closed-form sub-commands."""

import argparse
import logging
from math import sqrt
from pathlib import Path

from crossings.commands.analysis import bound_section
from crossings.commands.common import emit, positive_int
from crossings.errors import DomainError
from crossings.models import FamilyKind, GraphFamily
from crossings.schemas import BoundOut, ClosedFormDocument, MatchingCountsOut, TrustedOut
from crossings.services.bounds import VARIANTS, family_bound_constant
from crossings.services.families import make_family
from crossings.services.graph_parser import format_edge_list
from crossings.services.moments import closed_form_moments

logger = logging.getLogger(__name__)


def _family(args: argparse.Namespace) -> GraphFamily:
    return GraphFamily(FamilyKind(args.kind), args.n)


def run_family(args: argparse.Namespace) -> int:
    text = format_edge_list(make_family(_family(args)))
    if args.output in (None, "-"):
        print(text, end="")
    else:
        Path(args.output).write_text(text, encoding="utf-8")
        logger.info("Wrote %s(%d) to %s", args.kind, args.n, args.output)
    return 0


def run_closed_form(args: argparse.Namespace) -> int:
    f = _family(args)
    closed = closed_form_moments(f)
    bound = bound_section(None, closed.trusted(), args.variant)

    document = ClosedFormDocument(
        family=f.kind,
        n=f.size,
        mean=TrustedOut.of_trusted(closed.mean),
        second_moment=TrustedOut.of_trusted(closed.second_moment),
        variance=TrustedOut.of_trusted(closed.variance),
        matching_counts=MatchingCountsOut(m1=closed.edge_count, m2=closed.m2, m3=closed.m3, m4=closed.m4),
        bound=bound,
    )
    if isinstance(bound, BoundOut):
        try:
            constant, start = family_bound_constant(f.kind)
        except DomainError:
            pass
        else:
            document.bound_constant = constant
            document.bound_constant_from = start
            document.scaled_bound = bound.kolmogorov_bound * sqrt(f.size)
    emit(document)
    return 0


def _add_family_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--kind", required=True, choices=[k.value for k in FamilyKind])
    parser.add_argument("--n", required=True, type=positive_int)


def register(subparsers) -> None:
    family = subparsers.add_parser("family", help="generate a named graph family member")
    _add_family_arguments(family)
    family.add_argument("--output", help="file to write (default: standard output)")
    family.set_defaults(func=run_family)

    closed = subparsers.add_parser("closed-form", help="printed closed-form moments and bound of a family")
    _add_family_arguments(closed)
    closed.add_argument("--variant", choices=VARIANTS, default="proof")
    closed.set_defaults(func=run_closed_form)
