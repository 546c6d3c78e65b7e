"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from autonet import Network


@st.composite
def networks(draw, qs=(2, 3), max_n=3, max_size=81):
    q = draw(st.sampled_from(qs))
    n = draw(st.integers(1, max_n).filter(lambda k: q**k <= max_size))
    size = q**n
    images = draw(st.lists(st.integers(0, size - 1), min_size=size, max_size=size))
    return Network(q, n, images)


@st.composite
def network_and_config(draw, **kw):
    f = draw(networks(**kw))
    x = tuple(draw(st.lists(st.integers(0, f.q - 1), min_size=f.n, max_size=f.n)))
    return f, x
