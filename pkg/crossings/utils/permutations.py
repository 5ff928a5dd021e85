"""Vectorized crossing tests over stacks of embeddings (one embedding per row)."""

from itertools import islice, permutations
from typing import Iterator, Optional

import numpy as np

from crossings.config import CROSSING_CHUNK_CELLS


def crossing_mask(positions: np.ndarray, a, b, c, d) -> np.ndarray:
    """
    Boolean (rows x pairs) array: does chord (a,b) cross chord (c,d)?

    positions[r, v] is the slot of vertex v in embedding r. Chords cross iff
    exactly one endpoint of (c,d) lies strictly between the endpoints of (a,b).
    """
    pa = positions[:, a]
    pb = positions[:, b]
    lo = np.minimum(pa, pb)
    hi = np.maximum(pa, pb)
    pc = positions[:, c]
    pd = positions[:, d]
    inside_c = (lo < pc) & (pc < hi)
    inside_d = (lo < pd) & (pd < hi)
    return inside_c ^ inside_d


def crossing_counts(positions: np.ndarray, a, b, c, d,
                    chunk_cells: int = CROSSING_CHUNK_CELLS) -> np.ndarray:
    """Number of crossing pairs per row, evaluated in row chunks."""
    rows = positions.shape[0]
    pairs = len(a)
    out = np.zeros(rows, dtype=np.int64)
    if pairs == 0 or rows == 0:
        return out
    step = max(1, chunk_cells // pairs)
    for start in range(0, rows, step):
        block = positions[start:start + step]
        out[start:start + step] = crossing_mask(block, a, b, c, d).sum(axis=1)
    return out


def permutation_blocks(n: int, block_size: int = 65536, first: Optional[int] = None) -> Iterator[np.ndarray]:
    """
    All n! permutations of range(n) in lexicographic order, as int arrays of
    shape (<=block_size, n). With `first`, only those starting with it.
    """
    dtype = np.int8 if n < 127 else np.int32
    if first is None:
        source = permutations(range(n))
    else:
        rest = [v for v in range(n) if v != first]
        source = ((first,) + p for p in permutations(rest))
    while True:
        chunk = list(islice(source, block_size))
        if not chunk:
            return
        yield np.array(chunk, dtype=dtype).reshape(len(chunk), n)


def swap_columns(positions: np.ndarray, rows: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Copy of positions with the slots of vertices x[r] and y[r] exchanged in each listed row."""
    out = positions.copy()
    px = positions[rows, x]
    py = positions[rows, y]
    out[rows, x] = py
    out[rows, y] = px
    return out
