"""verify sub-command: run the enumeration oracles."""

import argparse

from crossings.commands.common import emit
from crossings.schemas import VerificationDocument
from crossings.services.verification import run_checks


def run_verify(args: argparse.Namespace) -> int:
    results = run_checks()
    if args.json:
        emit(VerificationDocument.of(results))
    else:
        width = max(len(r.name) for r in results)
        for r in results:
            print(f"{r.name:<{width}}  {'PASS' if r.passed else 'FAIL'}  {r.detail}")
        print(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return 0 if all(r.passed for r in results) else 1


def register(subparsers) -> None:
    verify = subparsers.add_parser("verify", help="check closed forms and tables against enumeration")
    verify.add_argument("--json", action="store_true", help="print the verification document")
    verify.set_defaults(func=run_verify)
