"""Domain objects: graphs, embeddings, matchings and the results computed from them."""

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from crossings.errors import ContractViolation

Probability = Union[Fraction, float]


class PairClass(str, enum.Enum):
    """Configuration of an ordered pair of 2-matchings (shared edges / shared vertices)."""

    C1 = "C1"  # vertex-disjoint
    C2 = "C2"  # one shared vertex
    C3 = "C3"  # one shared edge, other edges disjoint
    C4 = "C4"  # two shared vertices, no edge holds both
    C5 = "C5"  # two shared vertices held by a single edge
    C6 = "C6"  # three shared vertices
    C7 = "C7"  # one shared edge, other edges meet
    C8 = "C8"  # identical
    C9 = "C9"  # four shared vertices, no shared edge (a 4-cycle)


class FamilyKind(str, enum.Enum):
    pairing = "pairing"
    path = "path"
    cycle = "cycle"
    triangles = "triangles"
    star_with_tail = "star_with_tail"


class Trust(str, enum.Enum):
    verified = "VERIFIED"
    disputed = "DISPUTED"


class PmfMode(str, enum.Enum):
    exact = "exact"
    empirical = "empirical"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with canonical (u < v) edges."""

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] = ()
    adjacency: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"Vertex count must be non-negative, got {self.n}")
        if len(self.labels) > self.n:
            raise ValueError("More labels than vertices")
        neighbours: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if not 0 <= u < v < self.n:
                raise ValueError(f"Edge ({u}, {v}) is not canonical for n={self.n}")
            if v in neighbours[u]:
                raise ValueError(f"Duplicate edge ({u}, {v})")
            neighbours[u].add(v)
            neighbours[v].add(u)
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "adjacency", tuple(frozenset(s) for s in neighbours))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def max_degree(self) -> int:
        return max((len(s) for s in self.adjacency), default=0)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def label(self, v: int) -> str:
        if v < len(self.labels):
            return self.labels[v]
        return f"~{v}"

    def edges_share_vertex(self, e: int, f: int) -> bool:
        a, b = self.edges[e]
        return a in self.edges[f] or b in self.edges[f]


@dataclass(frozen=True)
class Embedding:
    """positions[v] is the slot of vertex v on the convex point set."""

    positions: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "positions", tuple(int(p) for p in self.positions))
        if sorted(self.positions) != list(range(len(self.positions))):
            raise ContractViolation(f"Not a permutation: {self.positions}")

    @classmethod
    def identity(cls, n: int) -> "Embedding":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.positions)

    def rotated(self, k: int = 1) -> "Embedding":
        n = self.n
        return Embedding(tuple((p + k) % n for p in self.positions))

    def reflected(self) -> "Embedding":
        n = self.n
        return Embedding(tuple(n - 1 - p for p in self.positions))


@dataclass(frozen=True, order=True)
class Matching:
    """Strictly increasing edge indices of pairwise vertex-disjoint edges."""

    edge_indices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.edge_indices)


@dataclass(frozen=True)
class GraphFamily:
    kind: FamilyKind
    size: int


@dataclass
class PairCensus:
    """Ordered-pair counts per class over M2(G) x M2(G)."""

    counts: dict[PairClass, int]
    m2: int

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def m3(self) -> int:
        return self.counts[PairClass.C3] // 6

    @property
    def m4(self) -> int:
        return self.counts[PairClass.C1] // 6

    @property
    def s2(self) -> int:
        return self.counts[PairClass.C2] // 4

    @property
    def s4(self) -> int:
        return self.counts[PairClass.C4] // 4

    @property
    def s5(self) -> int:
        return self.counts[PairClass.C5] // 2

    @property
    def s6(self) -> int:
        return self.counts[PairClass.C6] // 2

    @property
    def s7(self) -> int:
        return self.counts[PairClass.C7] // 2

    def check(self) -> None:
        c = self.counts
        problems = []
        if self.total != self.m2 * self.m2:
            problems.append(f"total {self.total} != m2^2 = {self.m2 ** 2}")
        if c[PairClass.C8] != self.m2:
            problems.append(f"C8 = {c[PairClass.C8]} != m2 = {self.m2}")
        for cls, divisor in ((PairClass.C1, 6), (PairClass.C3, 6), (PairClass.C2, 4), (PairClass.C4, 4),
                             (PairClass.C5, 2), (PairClass.C6, 2), (PairClass.C7, 2), (PairClass.C9, 2)):
            if c[cls] % divisor:
                problems.append(f"{cls.value} = {c[cls]} not divisible by {divisor}")
        if problems:
            raise ContractViolation("Census identities violated: " + "; ".join(problems))


@dataclass(frozen=True)
class MomentSummary:
    mean: Fraction
    second_moment: Fraction
    variance: Fraction
    m2: int
    m3: int
    m4: int
    edge_count: int
    max_degree: int


@dataclass(frozen=True)
class MomentReport(MomentSummary):
    census: PairCensus


@dataclass(frozen=True)
class TrustedValue:
    value: Fraction
    trust: Trust


@dataclass(frozen=True)
class ClosedFormMoments:
    """Printed closed forms for a family, each flagged VERIFIED or DISPUTED."""

    family: GraphFamily
    mean: TrustedValue
    second_moment: TrustedValue
    variance: TrustedValue
    m2: int
    m3: int
    m4: int
    edge_count: int
    max_degree: int

    def trusted(self) -> MomentSummary:
        mean = self.mean.value
        if self.variance.trust is Trust.verified:
            variance = self.variance.value
            second = variance + mean * mean
        else:
            second = self.second_moment.value
            variance = second - mean * mean
        return MomentSummary(
            mean=mean, second_moment=second, variance=variance,
            m2=self.m2, m3=self.m3, m4=self.m4,
            edge_count=self.edge_count, max_degree=self.max_degree,
        )


@dataclass(frozen=True)
class BoundReport:
    m: int
    max_degree: int
    m2: int
    m4: int
    variance: Fraction
    sigma: float
    a: int
    radicand: float
    psi_bound: float
    kolmogorov_bound: float
    variant: str = "proof"


@dataclass(frozen=True)
class Pmf:
    """Law of the crossing count: exact fractions or empirical frequencies."""

    probabilities: dict[int, Probability]
    mode: PmfMode
    sample_count: Optional[int] = None
    counts: Optional[dict[int, int]] = None

    @property
    def support(self) -> list[int]:
        return sorted(self.probabilities)

    def atoms(self) -> dict[int, Probability]:
        """Support points with positive probability."""
        return {k: p for k, p in sorted(self.probabilities.items()) if p}

    def mean(self) -> Probability:
        return sum(k * p for k, p in self.probabilities.items())

    def second_moment(self) -> Probability:
        return sum(k * k * p for k, p in self.probabilities.items())

    def variance(self) -> Probability:
        mu = self.mean()
        return self.second_moment() - mu * mu

    def cdf(self) -> list[tuple[int, Probability]]:
        running: Probability = Fraction(0) if self.mode is PmfMode.exact else 0.0
        out = []
        for k in self.support:
            running += self.probabilities[k]
            out.append((k, running))
        return out


@dataclass(frozen=True)
class CoupledSample:
    x: int
    xs: int
    matching_index: int
    repaired: bool


@dataclass(frozen=True)
class CouplingSummary:
    samples: int
    repaired: int
    mean_x: float
    mean_xs: float
    max_gap: int
    gap_bound: int


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
