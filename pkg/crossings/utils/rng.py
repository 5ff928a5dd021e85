"""Seeded random substreams, one per (seed, stream, block)."""

import numpy as np

from crossings.config import SAMPLE_BLOCK_SIZE

EMBEDDING_STREAM = 0
COUPLING_STREAM = 1


def block_rng(seed: int, stream: int, block: int) -> np.random.Generator:
    """
    Generator for one block of samples.

    The substream is SeedSequence(seed, spawn_key=(stream, block)), so it only
    depends on the block index and never on which worker draws it.
    """
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(stream, block)))


def sample_blocks(samples: int, block_size: int = SAMPLE_BLOCK_SIZE) -> list[tuple[int, int]]:
    """(block index, size) pairs covering `samples`; only the last block may be short."""
    full, rest = divmod(samples, block_size)
    blocks = [(k, block_size) for k in range(full)]
    if rest:
        blocks.append((full, rest))
    return blocks


def random_permutations(rng: np.random.Generator, size: int, n: int) -> np.ndarray:
    """`size` independent uniform permutations of range(n), one per row."""
    return rng.permuted(np.tile(np.arange(n, dtype=np.int32), (size, 1)), axis=1)
