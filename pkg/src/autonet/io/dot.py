"""Graphviz export of transition graphs."""

from __future__ import annotations

from typing import Iterator

import numpy as np

from ..core import Network, config_str, decode
from ..dynamics import components, interval_arcs, single_coordinate_arcs


def _q(s: str) -> str:
    return '"{}"'.format(s.replace('"', r"\""))


def transition_graph_dot(f: Network, full_arcs: bool = False, name: str = "G") -> Iterator[str]:
    """Yield the lines of a DOT digraph for the transition graph of ``f``.

    By default one edge is drawn per single-coordinate arc, merged into a
    double-headed edge when both directions occur. Unreachable fixed points
    are drawn gray. For Boolean networks the remaining hypercube edges are
    drawn gray and undirected, so the cube skeleton stays visible.
    ``full_arcs`` draws every arc ``x -> f^(s)(x)`` instead.
    """
    labels = [config_str(decode(k, f.q, f.n)) for k in range(f.size)]
    unreachable = set(components(f).unreachable_fixed)
    yield f"digraph {name} {{"
    yield "  node [shape=box, fontname=monospace];"
    for k, lab in enumerate(labels):
        style = " [color=gray, fontcolor=gray]" if k in unreachable else ""
        yield f"  {_q(lab)}{style};"
    if full_arcs:
        src, dst = interval_arcs(f)
        for a, b in sorted(zip(src.tolist(), dst.tolist())):
            yield f"  {_q(labels[a])} -> {_q(labels[b])};"
        yield "}"
        return
    src, dst, _ = single_coordinate_arcs(f)
    arcs = set(zip(src.tolist(), dst.tolist()))
    drawn = set()
    for a, b in sorted(arcs):
        if (b, a) in drawn:
            continue
        both = (b, a) in arcs
        attr = " [dir=both]" if both else ""
        yield f"  {_q(labels[a])} -> {_q(labels[b])}{attr};"
        drawn.add((a, b))
    if f.q == 2:
        for a in range(f.size):
            for j in range(f.n):
                b = a ^ (1 << j)
                if a < b and (a, b) not in arcs and (b, a) not in arcs:
                    yield f"  {_q(labels[a])} -> {_q(labels[b])} [dir=none, color=gray];"
    yield "}"


def to_dot(f: Network, full_arcs: bool = False) -> str:
    return "\n".join(transition_graph_dot(f, full_arcs)) + "\n"


def arc_count(f: Network) -> int:
    return int(np.count_nonzero(f.update_offsets))
