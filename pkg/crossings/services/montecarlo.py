"""
Random embeddings, the size-bias coupling and exact laws by enumeration.

Sampling runs in blocks of SAMPLE_BLOCK_SIZE; block k always draws from
the substream (seed, stream, k), and block tallies merge by integer
addition, so results do not depend on the worker count.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import factorial, sqrt
from typing import Callable, Sequence

import numpy as np

from crossings import config
from crossings.config import EXACT_LIMIT, EXACT_LIMIT_DEFAULT, WORKERS
from crossings.errors import CapacityError, ContractViolation, DomainError
from crossings.models import CoupledSample, CouplingSummary, Embedding, Graph, Pmf, PmfMode
from crossings.services.crossing import matching_endpoint_arrays
from crossings.services.matchings import enumerate_matchings
from crossings.utils.permutations import crossing_counts, permutation_blocks, swap_columns
from crossings.utils.rng import COUPLING_STREAM, EMBEDDING_STREAM, block_rng, random_permutations, sample_blocks

logger = logging.getLogger(__name__)

Endpoints = tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]


def _endpoints(g: Graph) -> Endpoints:
    return matching_endpoint_arrays(g, list(enumerate_matchings(g, 2)))


def _run_blocks(fn: Callable, tasks: Sequence, workers: int) -> list:
    if workers <= 1 or len(tasks) <= 1:
        return [fn(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, tasks))


def _check_exact_limit(g: Graph, limit: int) -> None:
    if limit > EXACT_LIMIT_DEFAULT:
        logger.warning("Exact enumeration limit raised to n=%d (%d! embeddings)", limit, limit)
    if g.n > limit:
        raise CapacityError("exact enumeration limit", limit, g.n)


def _repairs(pos: np.ndarray, ea: np.ndarray, eb: np.ndarray, fa: np.ndarray, fb: np.ndarray):
    """
    For each row, whether 2-matching {(ea, eb), (fa, fb)} crosses, and the two
    transpositions that make it cross otherwise.

    A non-crossing pair reads e, f, f, e around the circle for exactly one
    rotation; naming those vertices u1, v1, v2, u2, picking u1 or v1 swaps
    (v2, u2) and picking v2 or u2 swaps (v1, u1).
    """
    rows = np.arange(len(pos))
    verts = np.stack([ea, eb, fa, fb], axis=1)
    slots = pos[rows[:, None], verts]
    lo = np.minimum(slots[:, 0], slots[:, 1])
    hi = np.maximum(slots[:, 0], slots[:, 1])
    crosses = ((lo < slots[:, 2]) & (slots[:, 2] < hi)) ^ ((lo < slots[:, 3]) & (slots[:, 3] < hi))

    order = np.argsort(slots, axis=1)
    is_f = order >= 2
    starts = np.stack(
        [~is_f[:, k] & is_f[:, (k + 1) % 4] & is_f[:, (k + 2) % 4] & ~is_f[:, (k + 3) % 4] for k in range(4)],
        axis=1,
    )
    k = np.argmax(starts, axis=1)
    u1, v1, v2, u2 = (verts[rows, order[rows, (k + shift) % 4]] for shift in range(4))
    return crosses, (v2, u2), (v1, u1)


def sample_embedding(g: Graph, rng: np.random.Generator) -> Embedding:
    """Uniform embedding: an unbiased shuffle of the slots."""
    return Embedding(tuple(int(p) for p in rng.permutation(g.n)))


def _exact_block(task) -> np.ndarray:
    n, ends, first, length = task
    tally = np.zeros(length, dtype=np.int64)
    for block in permutation_blocks(n, first=first):
        tally += np.bincount(crossing_counts(block, *ends), minlength=length)
    return tally


def exact_distribution(g: Graph, limit: int = EXACT_LIMIT, workers: int = WORKERS) -> Pmf:
    """Exact law of X over all n! embeddings; support 0..m2."""
    _check_exact_limit(g, limit)
    ends = _endpoints(g)
    length = len(ends[0]) + 1
    firsts = list(range(g.n)) or [None]
    logger.info("Enumerating %d embeddings of a graph with %d two-matchings", factorial(g.n), length - 1)

    tally = sum(_run_blocks(_exact_block, [(g.n, ends, first, length) for first in firsts], workers))
    total = factorial(g.n)
    return Pmf(
        probabilities={k: Fraction(int(c), total) for k, c in enumerate(tally)},
        mode=PmfMode.exact,
    )


def star_tail_pmf(n: int) -> Pmf:
    """P(X = k) = 2 (n-2-k) / ((n-1)(n-2)) for k = 0..n-2."""
    if n < 4:
        raise DomainError(f"star_with_tail needs n >= 4, got {n}")
    return Pmf(
        probabilities={k: Fraction(2 * (n - 2 - k), (n - 1) * (n - 2)) for k in range(n - 1)},
        mode=PmfMode.exact,
    )


def _empirical_block(task) -> np.ndarray:
    n, ends, seed, block, size, length = task
    rng = block_rng(seed, EMBEDDING_STREAM, block)
    counts = crossing_counts(random_permutations(rng, size, n), *ends)
    return np.bincount(counts, minlength=length)


def empirical_distribution(g: Graph, samples: int, seed: int, workers: int = WORKERS) -> Pmf:
    """Frequencies of X over `samples` uniform embeddings."""
    if samples < 1:
        raise DomainError(f"samples must be positive, got {samples}")
    ends = _endpoints(g)
    length = len(ends[0]) + 1
    blocks = sample_blocks(samples)
    logger.info("Sampling %d embeddings in %d blocks on %d worker(s)", samples, len(blocks), max(1, workers))

    tasks = [(g.n, ends, seed, block, size, length) for block, size in blocks]
    tally = sum(_run_blocks(_empirical_block, tasks, workers))
    counts = {k: int(c) for k, c in enumerate(tally) if c}
    return Pmf(
        probabilities={k: c / samples for k, c in counts.items()},
        mode=PmfMode.empirical,
        sample_count=samples,
        counts=counts,
    )


def _coupled_block(n: int, ends: Endpoints, rng: np.random.Generator, size: int):
    """x, xs, chosen matching and repaired flag for `size` coupled draws."""
    a, b, c, d = ends
    pos = random_permutations(rng, size, n)
    chosen = rng.integers(len(a), size=size)
    pick = rng.integers(4, size=size)

    x = crossing_counts(pos, *ends)
    crosses, near, far = _repairs(pos, a[chosen], b[chosen], c[chosen], d[chosen])
    repaired = ~crosses
    first = pick < 2
    swap_x = np.where(first, near[0], far[0])
    swap_y = np.where(first, near[1], far[1])

    rows = np.flatnonzero(repaired)
    xs = x.copy()
    if len(rows):
        fixed = swap_columns(pos, rows, swap_x[rows], swap_y[rows])[rows]
        xs[rows] = crossing_counts(fixed, *ends)
    return x, xs, chosen, repaired


def size_bias_sample(g: Graph, rng: np.random.Generator) -> CoupledSample:
    """One draw of (X, X^s): the chosen 2-matching is made to cross by one transposition."""
    ends = _endpoints(g)
    if len(ends[0]) == 0:
        raise DomainError("degenerate: no 2-matchings")
    x, xs, chosen, repaired = _coupled_block(g.n, ends, rng, 1)
    return CoupledSample(x=int(x[0]), xs=int(xs[0]), matching_index=int(chosen[0]), repaired=bool(repaired[0]))


def _coupling_block(task) -> tuple[int, int, int, int]:
    n, ends, seed, block, size, gap_bound = task
    x, xs, _, repaired = _coupled_block(n, ends, block_rng(seed, COUPLING_STREAM, block), size)
    gap = int(np.abs(xs - x).max())
    if config.DEBUG and gap > gap_bound:
        raise ContractViolation(f"Coupling moved X by {gap} > {gap_bound} in block {block}")
    return int(x.sum()), int(xs.sum()), int(repaired.sum()), gap


def coupling_statistics(g: Graph, samples: int, seed: int, workers: int = WORKERS) -> CouplingSummary:
    if samples < 1:
        raise DomainError(f"samples must be positive, got {samples}")
    ends = _endpoints(g)
    if len(ends[0]) == 0:
        raise DomainError("degenerate: no 2-matchings")
    gap_bound = 2 * g.max_degree * (g.m - 1)
    tasks = [(g.n, ends, seed, block, size, gap_bound) for block, size in sample_blocks(samples)]
    results = _run_blocks(_coupling_block, tasks, workers)
    return CouplingSummary(
        samples=samples,
        repaired=sum(r[2] for r in results),
        mean_x=sum(r[0] for r in results) / samples,
        mean_xs=sum(r[1] for r in results) / samples,
        max_gap=max(r[3] for r in results),
        gap_bound=gap_bound,
    )


def _coupling_tallies(g: Graph, limit: int):
    """
    Weighted tallies over every (embedding, 2-matching, picked vertex).

    Each triple weighs 1; returns the weight of each X^s value, and per value
    of X the total weight and the weighted sum of X^s - X. Total weight is
    4 n! m2.
    """
    _check_exact_limit(g, limit)
    ends = _endpoints(g)
    m2 = len(ends[0])
    if m2 == 0:
        raise DomainError("degenerate: no 2-matchings")
    length = m2 + 1
    law = np.zeros(length, dtype=np.int64)
    weight_by_x = np.zeros(length, dtype=np.int64)
    shift_by_x = np.zeros(length, dtype=np.int64)

    for pos in permutation_blocks(g.n):
        x = crossing_counts(pos, *ends)
        rows = len(pos)
        for i in range(m2):
            ei = tuple(np.full(rows, end[i]) for end in ends)
            crosses, near, far = _repairs(pos, *ei)
            law += 4 * np.bincount(x[crosses], minlength=length)
            weight_by_x += 4 * np.bincount(x, minlength=length)
            idle = np.flatnonzero(~crosses)
            for swap in (near, far):
                xs = crossing_counts(swap_columns(pos, idle, swap[0][idle], swap[1][idle])[idle], *ends)
                law += 2 * np.bincount(xs, minlength=length)
                shift_by_x += 2 * np.bincount(x[idle], weights=xs - x[idle], minlength=length).astype(np.int64)
    return law, weight_by_x, shift_by_x, 4 * factorial(g.n) * m2


def size_bias_exact_law(g: Graph, limit: int = EXACT_LIMIT) -> Pmf:
    """Exact law of X^s under the coupling; satisfies mu P(X^s = k) = k P(X = k)."""
    law, _, _, total = _coupling_tallies(g, limit)
    return Pmf(probabilities={k: Fraction(int(c), total) for k, c in enumerate(law)}, mode=PmfMode.exact)


def exact_psi(g: Graph, limit: int = EXACT_LIMIT) -> tuple[Fraction, float]:
    """Var(E[X^s - X | X]) exactly, and its square root Psi."""
    _, weight_by_x, shift_by_x, total = _coupling_tallies(g, limit)
    mean = Fraction(0)
    second = Fraction(0)
    for k, w in enumerate(weight_by_x):
        if w:
            p = Fraction(int(w), total)
            cond = Fraction(int(shift_by_x[k]), int(w))
            mean += p * cond
            second += p * cond * cond
    variance = second - mean * mean
    return variance, sqrt(variance)
