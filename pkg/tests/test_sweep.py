import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from autonet import Network, check_bijective, check_commutativity, check_dynamically_local, check_idempotent
from autonet.sweep import (
    batch_bijective,
    batch_commutativity,
    batch_dynamically_local,
    batch_idempotent,
    boolean_network_blocks,
    boolean_network_count,
    boolean_networks,
    id_of_table,
    random_tables,
    sparse_tables,
    table_of_id,
)

SCOPES = ["global", "singletons", "all-subsets"]


def _stack(rng):
    out = {}
    for q, n in [(2, 1), (2, 2), (2, 3), (3, 2)]:
        out[(q, n)] = np.concatenate([random_tables(q, n, 40, rng), sparse_tables(q, n, 80, rng)])
    return out


@pytest.mark.parametrize("level", ["pairwise", "disjoint-subsets", "all-subsets"])
@pytest.mark.parametrize("strengthened", [False, True])
def test_batch_commutativity_matches_scalar(rng, level, strengthened):
    for (q, n), tables in _stack(rng).items():
        got = batch_commutativity(tables, q, n, level, strengthened)
        want = [bool(check_commutativity(Network(q, n, t), level, strengthened)) for t in tables]
        assert got.tolist() == want


@pytest.mark.parametrize("scope", SCOPES)
def test_batch_scoped_properties_match_scalar(rng, scope):
    pairs = [(batch_dynamically_local, check_dynamically_local),
             (batch_bijective, check_bijective),
             (batch_idempotent, check_idempotent)]
    for (q, n), tables in _stack(rng).items():
        for batch, scalar in pairs:
            got = batch(tables, q, n, scope)
            want = [bool(scalar(Network(q, n, t), scope)) for t in tables]
            assert got.tolist() == want, (batch.__name__, q, n)


def test_sparse_tables_hit_commutative_networks(rng):
    tables = sparse_tables(2, 3, 400, rng)
    assert tables.shape == (400, 8)
    assert 0 < batch_commutativity(tables, 2, 3, "pairwise").sum() < 400


def test_boolean_enumeration_is_complete():
    tables = boolean_networks(2, 0, boolean_network_count(2))
    assert len({tuple(t) for t in tables}) == 256
    blocks = list(boolean_network_blocks(2, block=100))
    assert [s for s, _ in blocks] == [0, 100, 200]
    assert np.array_equal(np.concatenate([b for _, b in blocks]), tables)


@settings(max_examples=100)
@given(st.integers(1, 3).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, boolean_network_count(n) - 1))))
def test_id_roundtrip(nk):
    n, k = nk
    t = table_of_id(n, k)
    assert id_of_table(n, t) == k
    assert all(0 <= v < 1 << n for v in t)


def test_id_zero_is_constant_zero():
    assert Network(2, 3, table_of_id(3, 0)) == Network.constant(2, 3, (0, 0, 0))
