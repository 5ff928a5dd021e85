from fractions import Fraction
from typing import Literal, Optional, Union

from pydantic import BaseModel

from crossings import __version__
from crossings.models import (
    CheckResult,
    CouplingSummary,
    FamilyKind,
    Graph,
    MomentSummary,
    PairCensus,
    Pmf,
    PmfMode,
    Trust,
    TrustedValue,
)
from crossings.utils.rational import decimal_str, fraction_str

SCHEMA_VERSION = 1


# --- Shared ---

class RationalOut(BaseModel):
    fraction: str
    decimal: str

    @classmethod
    def of(cls, value: Union[Fraction, int]) -> "RationalOut":
        return cls(fraction=fraction_str(value), decimal=decimal_str(value))


class DocumentHeader(BaseModel):
    schema_version: int = SCHEMA_VERSION
    tool_version: str = __version__
    input_digest: Optional[str] = None


class GraphSummary(BaseModel):
    n: int
    m: int
    max_degree: int

    @classmethod
    def of(cls, g: Graph) -> "GraphSummary":
        return cls(n=g.n, m=g.m, max_degree=g.max_degree)


# --- Analysis ---

class MatchingCountsOut(BaseModel):
    m1: int
    m2: int
    m3: int
    m4: int


class CensusOut(BaseModel):
    counts: dict[str, int]
    m2: int
    s2: int
    s4: int
    s5: int
    s6: int
    s7: int

    @classmethod
    def of(cls, census: PairCensus) -> "CensusOut":
        return cls(
            counts={c.value: count for c, count in census.counts.items()},
            m2=census.m2,
            s2=census.s2,
            s4=census.s4,
            s5=census.s5,
            s6=census.s6,
            s7=census.s7,
        )


class MomentsOut(BaseModel):
    mean: RationalOut
    second_moment: RationalOut
    variance: RationalOut

    @classmethod
    def of(cls, summary: MomentSummary) -> "MomentsOut":
        return cls(
            mean=RationalOut.of(summary.mean),
            second_moment=RationalOut.of(summary.second_moment),
            variance=RationalOut.of(summary.variance),
        )


class BoundOut(BaseModel):
    variant: str
    m: int
    max_degree: int
    m2: int
    m4: int
    sigma: float
    a: int
    radicand: float
    psi_bound: float
    psi_variance_bound: float
    kolmogorov_bound: float

    model_config = {"from_attributes": True}


class DegenerateOut(BaseModel):
    degenerate: Literal[True] = True
    reason: str


class AnalysisDocument(DocumentHeader):
    graph: GraphSummary
    matching_counts: MatchingCountsOut
    census: CensusOut
    moments: MomentsOut
    bound: Union[BoundOut, DegenerateOut]


class BoundDocument(DocumentHeader):
    graph: GraphSummary
    moments: MomentsOut
    bound: Union[BoundOut, DegenerateOut]


# --- Distributions ---

class PmfAtomOut(BaseModel):
    k: int
    probability: str
    count: Optional[int] = None


class PmfOut(BaseModel):
    mode: PmfMode
    sample_count: Optional[int] = None
    atoms: list[PmfAtomOut]

    @classmethod
    def of(cls, pmf: Pmf) -> "PmfOut":
        if pmf.mode is PmfMode.exact:
            atoms = [PmfAtomOut(k=k, probability=fraction_str(pmf.probabilities[k])) for k in pmf.support]
        else:
            atoms = [
                PmfAtomOut(k=k, probability=decimal_str(pmf.probabilities[k]), count=pmf.counts[k])
                for k in pmf.support
            ]
        return cls(mode=pmf.mode, sample_count=pmf.sample_count, atoms=atoms)


class StandardizationOut(BaseModel):
    source: Literal["empirical", "exact"]
    mean: str
    sigma: str


class CouplingOut(BaseModel):
    samples: int
    repaired: int
    mean_x: float
    mean_xs: float
    max_gap: int
    gap_bound: int

    model_config = {"from_attributes": True}

    @classmethod
    def of(cls, summary: CouplingSummary) -> "CouplingOut":
        return cls.model_validate(summary)


class SimulationDocument(DocumentHeader):
    graph: GraphSummary
    samples: int
    seed: int
    pmf: PmfOut
    mean: str
    variance: str
    standardization: StandardizationOut
    ks_distance: Optional[str] = None
    exact_moments: Optional[MomentsOut] = None
    coupling: Optional[CouplingOut] = None


class ExactDocument(DocumentHeader):
    graph: GraphSummary
    pmf: PmfOut
    mean: RationalOut
    variance: RationalOut


# --- Verification ---

class CheckOut(BaseModel):
    name: str
    passed: bool
    detail: str

    model_config = {"from_attributes": True}


class VerificationDocument(DocumentHeader):
    passed: bool
    checks: list[CheckOut]

    @classmethod
    def of(cls, results: list[CheckResult]) -> "VerificationDocument":
        return cls(
            passed=all(r.passed for r in results),
            checks=[CheckOut.model_validate(r) for r in results],
        )


# --- Families ---

class TrustedOut(RationalOut):
    trust: Trust

    @classmethod
    def of_trusted(cls, value: TrustedValue) -> "TrustedOut":
        return cls(fraction=fraction_str(value.value), decimal=decimal_str(value.value), trust=value.trust)


class ClosedFormDocument(DocumentHeader):
    family: FamilyKind
    n: int
    mean: TrustedOut
    second_moment: TrustedOut
    variance: TrustedOut
    matching_counts: MatchingCountsOut
    bound: Union[BoundOut, DegenerateOut]
    bound_constant: Optional[int] = None
    bound_constant_from: Optional[int] = None
    scaled_bound: Optional[float] = None
