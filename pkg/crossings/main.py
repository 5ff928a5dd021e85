"""Command-line entry point: wires the sub-commands and maps errors to exit codes."""

import argparse
import logging
import sys
from typing import Optional, Sequence

from crossings import __version__, config
from crossings.commands import analysis, families, simulation, verify
from crossings.errors import CapacityError, ContractViolation, DomainError, ParseError, UsageError

logger = logging.getLogger("crossings")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_CAPACITY = 3


class CliParser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad arguments; usage errors here exit with 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> CliParser:
    parser = CliParser(
        prog="crossings",
        description="Crossings of a graph embedded uniformly at random in convex position",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--workers", type=int, default=config.WORKERS,
                        help="worker processes for sampling and enumeration")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="warnings and errors only")

    subparsers = parser.add_subparsers(dest="command", required=True)
    analysis.register(subparsers)
    simulation.register(subparsers)
    families.register(subparsers)
    verify.register(subparsers)
    return parser


def configure_logging(verbose: bool = False, quiet: bool = False) -> None:
    level = logging.DEBUG if verbose else logging.WARNING if quiet else config.LOG_LEVEL
    logging.basicConfig(
        level=level,
        format="%(levelname)s:     %(name)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE

    configure_logging(args.verbose, args.quiet)
    try:
        return args.func(args)
    except ParseError as e:
        logger.error("Parse error: %s", e)
        return EXIT_PARSE
    except CapacityError as e:
        logger.error("%s", e)
        return EXIT_CAPACITY
    except (DomainError, ContractViolation, UsageError) as e:
        logger.error("%s", e)
        return EXIT_USAGE
    except OSError as e:
        logger.error("I/O error: %s", e)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
