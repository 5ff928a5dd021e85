from itertools import permutations

import numpy as np
import pytest

from crossings.errors import ContractViolation
from crossings.models import Embedding
from crossings.services.crossing import count_crossings, edges_cross, matching_endpoint_arrays
from crossings.services.matchings import enumerate_matchings
from crossings.tests.helpers import complete, family, random_graphs
from crossings.utils.permutations import crossing_counts, permutation_blocks


def test_nested_blocks_do_not_cross(path4):
    # edges (0,1) and (2,3) are edge indices 0 and 2
    assert not edges_cross(path4, Embedding.identity(4), 0, 2)


def test_interleaved_slots_cross(path4):
    assert edges_cross(path4, Embedding((0, 2, 1, 3)), 0, 2)


def test_shared_vertex_is_a_contract_violation(path4):
    with pytest.raises(ContractViolation):
        edges_cross(path4, Embedding.identity(4), 0, 1)
    with pytest.raises(ContractViolation):
        edges_cross(path4, Embedding.identity(4), 2, 2)


def test_edge_index_out_of_range(path4):
    with pytest.raises(ContractViolation, match="out of range"):
        edges_cross(path4, Embedding.identity(4), 0, 3)
    with pytest.raises(ContractViolation, match="out of range"):
        edges_cross(path4, Embedding.identity(4), -1, 2)


def test_embedding_size_must_match(path4):
    with pytest.raises(ContractViolation):
        count_crossings(path4, Embedding.identity(5))


def test_embedding_must_be_a_permutation():
    with pytest.raises(ContractViolation):
        Embedding((0, 0, 1))


def test_reflection_and_rotation_preserve_crossings():
    g = family("pairing", 3)
    for positions in permutations(range(6)):
        emb = Embedding(positions)
        expected = [edges_cross(g, emb, e, f) for e, f in ((0, 1), (0, 2), (1, 2))]
        for other in (emb.reflected(), emb.rotated(), emb.rotated(4)):
            assert [edges_cross(g, other, e, f) for e, f in ((0, 1), (0, 2), (1, 2))] == expected


def test_vectorized_counts_match_scalar_count():
    g = complete(6)
    ends = matching_endpoint_arrays(g, list(enumerate_matchings(g, 2)))
    block = next(permutation_blocks(6, block_size=200))
    counts = crossing_counts(block, *ends, chunk_cells=64)
    assert counts.tolist() == [count_crossings(g, Embedding(row)) for row in block]


def test_identity_embedding_of_complete_graph():
    # on a convex polygon every 4 vertices contribute exactly one crossing
    assert count_crossings(complete(6), Embedding.identity(6)) == 15


def test_crossing_counts_without_pairs():
    positions = np.arange(6, dtype=np.int8).reshape(2, 3)
    empty = matching_endpoint_arrays(complete(3), [])
    assert crossing_counts(positions, *empty).tolist() == [0, 0]


@pytest.mark.parametrize("g", random_graphs(12, 10, seed=21))
def test_edges_cross_is_symmetric(g):
    rng = np.random.default_rng(g.m)
    for _ in range(20):
        emb = Embedding(rng.permutation(g.n))
        for e in range(g.m):
            for f in range(e + 1, g.m):
                if not g.edges_share_vertex(e, f):
                    assert edges_cross(g, emb, e, f) == edges_cross(g, emb, f, e)


@pytest.mark.parametrize("g", random_graphs(12, 10, seed=5))
def test_count_invariant_under_rotation_and_reflection(g):
    rng = np.random.default_rng(g.n * 100 + g.m)
    for _ in range(25):
        emb = Embedding(rng.permutation(g.n))
        expected = count_crossings(g, emb)
        k = int(rng.integers(1, g.n))
        assert count_crossings(g, emb.rotated(k)) == expected
        assert count_crossings(g, emb.reflected()) == expected
        assert count_crossings(g, emb.reflected().rotated(k)) == expected
