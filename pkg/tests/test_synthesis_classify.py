import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from autonet import Network, apply, check_commutativity, components, update, update_word
from autonet.boolean import (
    ArrangementNetworkSpec,
    UnionError,
    UnsupportedAlphabet,
    build_arrangement_network,
    classify,
    random_globally_commutative,
    reachable_region,
    union_networks,
    validate_arrangement,
)
from autonet.boolean.classify import _check_component
from autonet.boolean.networks import random_arrangement, random_spec
from autonet.core import NetworkError, decode, delta, encode
from autonet.sweep import boolean_networks, batch_commutativity

X3 = ["**0", "1**"]


def spec(patterns, choice=None):
    return ArrangementNetworkSpec.from_patterns(patterns, choice or {})


def test_build_examples(x3_negate):
    f = build_arrangement_network(spec(X3, {2: "negate"}))
    assert apply(f, "000") == (1, 1, 0)
    assert apply(f, "011") == (0, 1, 1)
    assert f == x3_negate
    whole = build_arrangement_network(spec(["***"], {1: "negate", 2: "negate", 3: "negate"}))
    assert whole == Network.negation(3)


def test_spec_validation():
    with pytest.raises(NetworkError, match="free dimensions"):
        spec(X3)
    with pytest.raises(NetworkError, match="unknown"):
        spec(X3, {2: "flip"})


def test_union_examples():
    lo = build_arrangement_network(spec(["0*"], {2: "negate"}))
    hi = build_arrangement_network(spec(["1*"], {2: "negate"}))
    u = union_networks([lo, hi])
    assert u.table == ((0, 1), (0, 0), (1, 1), (1, 0))
    assert check_commutativity(u, "all-subsets")
    assert union_networks([lo]) == lo
    with pytest.raises(UnionError) as e:
        union_networks([lo, build_arrangement_network(spec(["*0"], {1: "negate"}))])
    assert e.value.witness == 0 and e.value.parts == (0, 1)


def test_reachable_region(x3_negate):
    assert reachable_region(x3_negate) == {0, 2, 4, 5, 6, 7}


def test_classify_examples(swap, x3_negate):
    rep = classify(x3_negate)
    assert rep.is_globally_commutative
    (comp,) = rep.components
    assert comp.members == (0, 2, 4, 5, 6, 7)
    assert dict(comp.spec.free_choice) == {2: "negate"}
    assert comp.spec.arrangement.content() == validate_arrangement(X3).content()
    assert rep.unreachable_fixed == (1, 3)

    bad = classify(swap)
    assert not bad
    assert bad.components[0].members == (0, 1, 2, 3)
    assert bad.components[0].failure == "not-uniform"

    ident = classify(Network.identity(2, 3))
    assert ident and ident.components == ()
    with pytest.raises(UnsupportedAlphabet):
        classify(Network.identity(3, 2))


def test_failure_reasons():
    # 000 -> 100 -> 101 ... spans a component with no star centre
    f = Network.from_table(2, 3, ["100", "001", "010", "111", "000", "110", "101", "011"])
    assert [v.failure for v in classify(f).components] == ["not-arrangement-content"]
    assert classify(f).components[0].members == (0, 3, 4, 5, 6, 7)


def test_checks_after_uniformity_on_hand_picked_sets():
    # On genuine components these two conditions follow from uniformity
    # (arcs never leave a component); exercise them on chosen point sets.
    content = tuple(sorted(validate_arrangement(X3).content()))
    ident = Network.identity(2, 3)
    assert _check_component(ident, content).failure == "trivial-internal-dimension"
    g = Network.from_function(2, 3, lambda x: (0, 1 - x[1], 0))
    v = _check_component(g, content)
    assert v.failure == "tight-constant-violation" and "f_1" in v.detail


def test_reasons_seen_at_n2():
    seen = set()
    for row in boolean_networks(2, 0, 256):
        for v in classify(Network(2, 2, row)).components:
            seen.add(v.failure)
    assert seen == {None, "not-uniform"}


def test_classification_exhaustive_n2():
    tables = boolean_networks(2, 0, 256)
    truth = batch_commutativity(tables, 2, 2, "all-subsets")
    got = np.array([bool(classify(Network(2, 2, t))) for t in tables])
    assert np.array_equal(got, truth)
    assert truth.sum() == 44


@given(st.integers(1, 4), st.integers(0, 2**32 - 1))
def test_reconstruction_round_trip(n, seed):
    rng = np.random.default_rng(seed)
    X = random_arrangement(n, rng)
    if X is None:
        return
    s = random_spec(X, rng)
    f = build_arrangement_network(s)
    assert check_commutativity(f, "all-subsets")
    comps = components(f).nontrivial()
    content = X.content()
    if len(content) == 1:
        assert f == Network.identity(2, n) and not comps
        return
    assert comps == (tuple(sorted(content)),)
    rep = classify(f)
    assert rep
    (v,) = rep.components
    assert v.spec.arrangement.content() == content
    assert dict(v.spec.free_choice) == dict(s.free_choice)
    assert build_arrangement_network(v.spec) == f


@given(st.integers(1, 4), st.integers(0, 2**32 - 1))
def test_random_unions_are_commutative_and_classified(n, seed):
    f = random_globally_commutative(n, np.random.default_rng(seed))
    assert check_commutativity(f, "all-subsets")
    rep = classify(f)
    assert rep
    rebuilt = union_networks([build_arrangement_network(v.spec) for v in rep.components]) \
        if rep.components else Network.identity(2, n)
    assert rebuilt == f


@given(st.integers(1, 4), st.integers(0, 2**32 - 1), st.data())
def test_delta_update_reaches_word_images(n, seed, data):
    # on commutative networks, anything reachable by a word is one update away
    f = random_globally_commutative(n, np.random.default_rng(seed))
    x = decode(data.draw(st.integers(0, (1 << n) - 1)), 2, n)
    word = data.draw(st.lists(st.sets(st.integers(1, n)), max_size=3))
    y = update_word(f, word, x)
    assert update(f, delta(x, y), x) == y


@given(st.integers(2, 4), st.integers(0, 2**32 - 1))
def test_component_members_have_arcs_inside(n, seed):
    f = random_globally_commutative(n, np.random.default_rng(seed))
    dec = components(f)
    for comp in dec.nontrivial():
        members = set(comp)
        for k in comp:
            x = decode(k, 2, n)
            outs = {encode(update(f, {i}, x), 2) for i in range(1, n + 1)} - {k}
            ins = {j for j in members if k in {encode(update(f, {i}, decode(j, 2, n)), 2) for i in range(1, n + 1)}}
            assert outs & members or ins
