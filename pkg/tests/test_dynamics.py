import math

import networkx as nx
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from autonet import (
    Network,
    apply,
    check_bijective,
    check_dynamically_local,
    check_idempotent,
    components,
    orbit_analysis,
    pi,
    power,
    update,
)
from autonet.core import all_node_sets, decode, encode
from autonet.dynamics import _weak_labels, interval_arcs, single_coordinate_arcs, unreachable_fixed_points
import autonet.dynamics as dynamics

from strategies import networks


def naive_orbit(f):
    """Smallest (t, p) with f^(t+p) == f^t, by walking powers."""
    powers = [power(f, 0)]
    for m in range(1, 3 * f.size + 2):
        powers.append(power(f, m))
    for total in range(1, len(powers)):
        for t in range(total):
            p = total - t
            if powers[t + p] == powers[t]:
                # valid pairs are t >= T with P | p, so the least total is (T, P)
                return t, p
    raise AssertionError("no repetition found")


def test_pi():
    assert [pi(q) for q in (2, 3, 4, 5, 6)] == [2, 6, 12, 60, 60]


def test_orbit_examples(negation):
    assert orbit_analysis(negation) == (0, 2)
    assert orbit_analysis(Network.constant(2, 2, "00")) == (1, 1)
    assert orbit_analysis(Network.identity(2, 2)) == (0, 1)


def test_orbit_truncated_prime_map():
    # states 1, 3, 9, 27, 81, 243 relabelled 0..5: 1->3->9->27->81->243->27
    f = Network(6, 1, [1, 2, 3, 4, 5, 3])
    assert orbit_analysis(f) == (3, 3)


@given(networks(qs=(2, 3, 4), max_n=3, max_size=27))
def test_orbit_matches_naive_oracle(f):
    t, p = orbit_analysis(f)
    assert (t, p) == naive_orbit(f)
    assert power(f, t + p) == power(f, t)
    if t:
        assert power(f, t - 1 + p) != power(f, t - 1)
    for d in range(1, p):
        assert power(f, t + d) != power(f, t)


def test_dynamically_local_examples(negation):
    assert check_dynamically_local(negation)
    cycle = Network.from_table(2, 2, ["01", "10", "00", "11"])
    v = check_dynamically_local(cycle)
    assert not v and v.witness == (frozenset({1, 2}), (0, 0))


@given(networks(qs=(2, 3, 4), max_n=3, max_size=64))
def test_singleton_scope_always_local(f):
    assert check_dynamically_local(f, "singletons")


@given(networks(qs=(2, 3), max_n=3))
def test_dynamically_local_means_power_identity(f):
    hi, lo = pi(f.q) + f.q - 1, f.q - 1
    assert bool(check_dynamically_local(f)) == (power(f, hi) == power(f, lo))
    t, p = orbit_analysis(f)
    assert bool(check_dynamically_local(f)) == (t <= f.q - 1 and pi(f.q) % p == 0)


def test_bijective_examples(swap):
    assert check_bijective(swap)
    v = check_bijective(swap, "singletons")
    assert not v
    s, (a, b) = v.witness
    assert s == {1}
    assert update(swap, s, a) == update(swap, s, b)
    assert (a, b) == ((0, 0), (1, 0))
    assert not check_bijective(Network.constant(2, 2, "01"))


def test_idempotent_examples(negation, x3_negate):
    const = Network.constant(2, 2, "01")
    for scope in ("global", "singletons", "all-subsets"):
        assert check_idempotent(const, scope)
    assert not check_idempotent(negation)


def test_idempotence_scopes_agree_on_arrangement_networks(x3_negate):
    from autonet.boolean import ArrangementNetworkSpec, build_arrangement_network

    # negating the free node is an involution there: f(000) = 110, f(110) = 100
    assert apply(x3_negate, "000") == (1, 1, 0) and apply(x3_negate, "110") == (1, 0, 0)
    assert [bool(check_idempotent(x3_negate, s)) for s in ("global", "singletons", "all-subsets")] == [False] * 3
    for choice in ("const0", "const1"):
        g = build_arrangement_network(ArrangementNetworkSpec.from_patterns(["**0", "1**"], {2: choice}))
        assert [bool(check_idempotent(g, s)) for s in ("global", "singletons", "all-subsets")] == [True] * 3


@pytest.mark.parametrize("scope", ["global", "singletons", "all-subsets"])
@given(f=networks())
def test_scoped_witnesses_are_first_failures(f, scope):
    sets = list(all_node_sets(f.n))
    if scope == "global":
        sets = [frozenset(range(1, f.n + 1))]
    elif scope == "singletons":
        sets = [s for s in sets if len(s) == 1]
    first_idem = first_bij = None
    for s in sets:
        g = [encode(update(f, s, decode(k, f.q, f.n)), f.q) for k in range(f.size)]
        if first_idem is None:
            bad = [k for k in range(f.size) if g[g[k]] != g[k]]
            if bad:
                first_idem = (s, decode(bad[0], f.q, f.n))
        if first_bij is None:
            pairs = [(a, b) for a in range(f.size) for b in range(a + 1, f.size) if g[a] == g[b]]
            if pairs:
                first_bij = (s, tuple(decode(v, f.q, f.n) for v in pairs[0]))
    assert check_idempotent(f, scope).witness == first_idem
    assert check_bijective(f, scope).witness == first_bij


def test_components_examples(swap, x3_negate):
    ident = components(Network.identity(2, 2))
    assert ident.components == ((0,), (1,), (2,), (3,))
    assert ident.unreachable_fixed == (0, 1, 2, 3)
    dec = components(x3_negate)
    assert dec.components == ((0, 2, 4, 5, 6, 7), (1,), (3,))
    assert dec.unreachable_fixed == (1, 3)
    assert components(swap).components == ((0, 1, 2, 3),)


def interval_arcs_oracle(f):
    arcs = set()
    for k in range(f.size):
        x = decode(k, f.q, f.n)
        for s in all_node_sets(f.n):
            y = encode(update(f, s, x), f.q)
            if y != k:
                arcs.add((k, y))
    return arcs


@given(networks(qs=(2, 3), max_n=3))
def test_interval_arcs_are_all_updates(f):
    src, dst = interval_arcs(f)
    got = list(zip(src.tolist(), dst.tolist()))
    assert len(got) == len(set(got))
    assert set(got) == interval_arcs_oracle(f)


@given(networks(qs=(2, 3), max_n=3))
def test_components_match_networkx(f):
    g = nx.Graph()
    g.add_nodes_from(range(f.size))
    g.add_edges_from(interval_arcs_oracle(f))
    want = sorted(tuple(sorted(c)) for c in nx.connected_components(g))
    dec = components(f)
    assert list(dec.components) == want
    assert set(dec.unreachable_fixed) == unreachable_fixed_points(f)
    assert set(dec.fixed_points) == {k for k in range(f.size) if f.images[k] == k}
    assert set(dec.gardens_of_eden) == set(range(f.size)) - set(f.images.tolist())
    # x and f(x) always share a component
    assert all(dec.labels[k] == dec.labels[f.images[k]] for k in range(f.size))


def test_union_find_paths_agree(rng, monkeypatch):
    for q, n in [(2, 6), (3, 4), (2, 10)]:
        for _ in range(3):
            f = Network(q, n, rng.integers(0, q**n, size=q**n) if rng.random() < 0.5
                        else np.where(rng.random(q**n) < 0.9, np.arange(q**n), rng.integers(0, q**n, size=q**n)))
            src, dst = interval_arcs(f)
            small = _weak_labels(f.size, src, dst)
            monkeypatch.setattr(dynamics, "SMALL_GRAPH", 0)
            large = _weak_labels(f.size, src, dst)
            monkeypatch.undo()
            assert np.array_equal(small, large)


def test_single_coordinate_arcs(x3_negate):
    src, dst, nodes = single_coordinate_arcs(x3_negate)
    for a, b, i in zip(src, dst, nodes):
        assert encode(update(x3_negate, {int(i)}, decode(int(a), 2, 3)), 2) == b != a


def test_components_guard():
    from autonet import StateSpaceTooLarge

    with pytest.raises(StateSpaceTooLarge):
        components(Network.negation(12), max_arcs=1000)


def test_eq5_alphabet_level_exhaustive_small_q():
    # every self-map of a 3-set or 4-set
    for q in (3, 4):
        for k in range(q**q):
            images = list(decode(k, q, q))
            f = Network(q, 1, images)
            assert power(f, pi(q) + q - 1) == power(f, q - 1)
            t, p = orbit_analysis(f)
            assert t <= q - 1 and p <= q and pi(q) % p == 0 and math.lcm(p, pi(q)) == pi(q)


def test_apply_is_table_lookup(x3_negate):
    for k in range(8):
        assert encode(apply(x3_negate, decode(k, 2, 3)), 2) == x3_negate.images[k]
