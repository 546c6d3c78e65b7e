import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from autonet import (
    Network,
    NetworkError,
    Schedule,
    StateSpaceTooLarge,
    apply,
    compose,
    decode,
    delta,
    encode,
    power,
    schedule_network,
    update,
    update_network,
    update_word,
)
from autonet.core import all_node_sets, as_configuration, mask_of, nodes_of

from strategies import network_and_config, networks


def test_encoding_is_big_endian():
    assert encode((1, 0, 0), 2) == 4
    assert encode((0, 0, 1), 2) == 1
    assert encode((2, 1), 3) == 7
    assert decode(7, 3, 2) == (2, 1)


@pytest.mark.parametrize("q,n", [(2, 1), (2, 4), (3, 3), (4, 2), (5, 2)])
def test_encode_decode_inverse(q, n):
    for k in range(q**n):
        assert encode(decode(k, q, n), q) == k


def test_apply_examples(swap, negation):
    assert apply(Network.identity(2, 2), "01") == (0, 1)
    assert apply(swap, "01") == (1, 0)
    assert apply(negation, "00") == (1, 1)


def test_update_examples(swap):
    assert update(swap, {1}, "01") == (1, 1)
    assert update(swap, set(), "01") == (0, 1)
    assert update(swap, {1, 2}, "01") == apply(swap, "01")


def test_update_word_examples(swap):
    assert update_word(swap, [{1}, {2}], "01") == (1, 1)
    assert update_word(swap, [{2}, {1}], "01") == (0, 0)
    assert update_word(swap, [], "01") == (0, 1)


def test_schedule_examples(swap, negation):
    assert schedule_network(negation, [{1}, {2}]) == negation
    g = schedule_network(swap, [{1}, {2}])
    assert apply(g, "01") == (1, 1) != apply(swap, "01")
    assert schedule_network(swap, [{1, 2}]) == swap


def test_delta_examples():
    assert delta((0, 0), (0, 0)) == frozenset()
    assert delta((0, 0), (1, 1)) == {1, 2}
    assert delta((0, 1, 0), (0, 1, 1)) == {3}


def test_compose_and_power(swap, negation):
    ident = Network.identity(2, 2)
    assert power(negation, 2) == ident
    assert power(swap, 1) == swap
    assert power(swap, 0) == ident
    assert compose(ident, swap) == swap
    # compose(f, g) = f after g
    c = Network.constant(2, 2, "10")
    assert compose(swap, c) == Network.constant(2, 2, "01")


def test_invalid_inputs():
    with pytest.raises(NetworkError):
        Network(2, 2, [0, 1, 2])
    with pytest.raises(NetworkError):
        Network(2, 2, [0, 1, 2, 4])
    with pytest.raises(NetworkError):
        as_configuration("012", 2, 3)
    with pytest.raises(NetworkError):
        update(Network.identity(2, 2), {3}, "00")
    with pytest.raises(StateSpaceTooLarge):
        Network(2, 25, np.zeros(1, dtype=np.int64))


def test_schedule_validation():
    Schedule(3, [{2}, set(), {1, 3}])
    with pytest.raises(NetworkError):
        Schedule(3, [{1, 2}, {2, 3}])
    with pytest.raises(NetworkError):
        Schedule(3, [{1}, {2}])
    assert Schedule.sequential([3, 1, 2]).blocks == (frozenset({3}), frozenset({1}), frozenset({2}))


def test_node_set_masks_are_colex():
    sets = list(all_node_sets(3))
    assert sets[:4] == [frozenset(), {1}, {2}, {1, 2}]
    for m in range(8):
        assert mask_of(nodes_of(m)) == m


def test_networks_are_immutable_and_hashable(swap):
    with pytest.raises(ValueError):
        swap.images[0] = 3
    assert hash(swap) == hash(Network.from_table(2, 2, ["00", "10", "01", "11"]))
    assert len({swap, Network.identity(2, 2), swap}) == 2


@pytest.mark.parametrize("q,n", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)])
def test_update_matches_definition_exhaustively(q, n, rng):
    for _ in range(3):
        f = Network(q, n, rng.integers(0, q**n, size=q**n))
        for s in all_node_sets(n):
            g = update_network(f, s)
            for k in range(q**n):
                x = decode(k, q, n)
                fx = apply(f, x)
                want = tuple(fx[i] if i + 1 in s else x[i] for i in range(n))
                assert update(f, s, x) == want == apply(g, x)


@given(network_and_config(), st.data())
def test_word_is_left_to_right_fold(fx, data):
    f, x = fx
    word = data.draw(st.lists(st.sets(st.integers(1, f.n)), max_size=4))
    y = x
    for s in word:
        y = update(f, s, y)
    assert update_word(f, word, x) == y


@given(networks(), st.data())
def test_schedule_block_depends_only_on_prefix(f, data):
    order = data.draw(st.permutations(range(1, f.n + 1)))
    cut = data.draw(st.integers(0, f.n))
    blocks = [set(order[:cut]), set(order[cut:])]
    g = schedule_network(f, blocks)
    # the first block only sees f itself; the second sees the first update
    for k in range(f.size):
        x = decode(k, f.q, f.n)
        after_first = update(f, blocks[0], x)
        gx = apply(g, x)
        for i in blocks[0]:
            assert gx[i - 1] == apply(f, x)[i - 1]
        for i in blocks[1]:
            assert gx[i - 1] == apply(f, after_first)[i - 1]


@given(networks(), st.integers(0, 9))
def test_power_matches_repeated_composition(f, m):
    g = Network.identity(f.q, f.n)
    for _ in range(m):
        g = compose(f, g)
    assert power(f, m) == g


def test_from_local_functions_and_digits():
    f = Network.from_local_functions(2, 2, [lambda x: x[1], lambda x: x[0]])
    assert f == Network.from_table(2, 2, ["00", "10", "01", "11"])
    d = np.array(list(itertools.product([0, 1], repeat=2)))[:, ::-1]
    assert Network.from_digits(2, 2, d) == f
