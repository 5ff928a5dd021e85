"""
Normal-approximation bounds for the crossing count.

All terms are evaluated as Fractions; the result is converted to float once,
at the outermost step. m and the max degree come from the moment summary, so
the bounds also apply to closed-form family moments without a census.
"""

import logging
from fractions import Fraction
from math import sqrt
from typing import Optional

from crossings.errors import ContractViolation, DomainError
from crossings.models import BoundReport, FamilyKind, Graph, MomentSummary

logger = logging.getLogger(__name__)

VARIANTS = ("proof", "intro")

# printed constant c and the first n it is claimed for: bound <= c / sqrt(n)
FAMILY_BOUND_CONSTANTS = {
    FamilyKind.pairing: (1268, 4),
    FamilyKind.path: (7757, 14),
    FamilyKind.cycle: (5898, 15),
    FamilyKind.triangles: (2942, 3),
}


def _shape(g: Optional[Graph], report: MomentSummary) -> tuple[int, int]:
    if g is not None and (g.m, g.max_degree) != (report.edge_count, report.max_degree):
        raise ContractViolation(
            f"Graph (m={g.m}, max degree={g.max_degree}) does not match the moment report "
            f"(m={report.edge_count}, max degree={report.max_degree})"
        )
    return report.edge_count, report.max_degree


def psi_variance_bound(g: Optional[Graph], report: MomentSummary) -> float:
    """4 D^2 (m-1)^2 (1 - 6 m4/m2^2 + (D-1)^2 (m-4) / (2 m2)), D the max degree."""
    m, delta = _shape(g, report)
    if report.m2 == 0:
        raise DomainError("degenerate: no 2-matchings")
    inner = (
        1
        - Fraction(6 * report.m4, report.m2 ** 2)
        + Fraction((delta - 1) ** 2 * (m - 4), 2 * report.m2)
    )
    return float(4 * delta ** 2 * (m - 1) ** 2 * inner)


def radicand(m: int, delta: int, m2: int, m4: int, variant: str = "proof") -> Fraction:
    """
    1 - 6 m4/m2^2 + (D-1)^2 m / (2 m2) for the "proof" variant; the "intro"
    variant drops the factor 1/2 on the last term.
    """
    if variant not in VARIANTS:
        raise DomainError(f"Unknown bound variant {variant!r}, expected one of {VARIANTS}")
    last = Fraction((delta - 1) ** 2 * m, m2)
    if variant == "proof":
        last /= 2
    value = 1 - Fraction(6 * m4, m2 ** 2) + last
    # 6 m4 <= m2^2: each disjoint ordered pair of 2-matchings is an ordered pair
    if value < 0:
        raise ContractViolation(f"Negative radicand {value}")
    return value


def stein_kolmogorov_bound(mean: float, sigma: float, a: float, psi: float) -> float:
    """Kolmogorov bound 6 mu A^2 / sigma^3 + 2 mu Psi / sigma^2 for a coupling with |X^s - X| <= A."""
    if sigma <= 0:
        raise DomainError("bound undefined: sigma=0")
    return 6 * mean * a ** 2 / sigma ** 3 + 2 * mean * psi / sigma ** 2


def kolmogorov_bound(
    g: Optional[Graph],
    report: MomentSummary,
    variant: str = "proof",
    variance: Optional[Fraction] = None,
) -> BoundReport:
    """
    (4 m2 D m) / (3 sigma^2) * [6 D m / sigma + sqrt(radicand)].

    ``variance`` replaces the report's variance, e.g. by a printed lower bound
    on sigma^2, which can only enlarge the result.
    """
    m, delta = _shape(g, report)
    variance = Fraction(report.variance if variance is None else variance)
    if variance <= 0:
        raise DomainError("bound undefined: sigma=0")
    if report.m2 == 0:
        raise DomainError("degenerate: no 2-matchings")

    rad = radicand(m, delta, report.m2, report.m4, variant)
    prefactor = Fraction(4 * report.m2 * delta * m, 3) / variance
    sigma = sqrt(variance)
    a = 2 * delta * m
    bound = float(prefactor) * (6 * delta * m / sigma + sqrt(rad))
    logger.debug("Kolmogorov bound (%s): m=%d D=%d m2=%d -> %.6g", variant, m, delta, report.m2, bound)
    return BoundReport(
        m=m,
        max_degree=delta,
        m2=report.m2,
        m4=report.m4,
        variance=variance,
        sigma=sigma,
        a=a,
        radicand=float(rad),
        psi_bound=a * sqrt(rad),
        kolmogorov_bound=bound,
        variant=variant,
    )


def family_bound_constant(kind: FamilyKind) -> tuple[int, int]:
    """(c, n0) such that the bound is claimed to be <= c / sqrt(n) for n >= n0."""
    try:
        return FAMILY_BOUND_CONSTANTS[kind]
    except KeyError:
        raise DomainError(f"No printed bound constant for {kind.value}") from None


def printed_variance_lower_bound(kind: FamilyKind, n: int) -> Fraction:
    """Printed lower bound on sigma^2 used to derive the family constant."""
    lower = {
        FamilyKind.pairing: Fraction(n ** 3, 45),
        FamilyKind.path: Fraction(n ** 3, 60),
        FamilyKind.cycle: Fraction(n ** 3, 50),
        FamilyKind.triangles: Fraction(3 * n ** 3, 5),
    }
    if kind not in lower:
        raise DomainError(f"No printed variance lower bound for {kind.value}")
    return lower[kind]
