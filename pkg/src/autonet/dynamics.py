"""Orbit structure, scoped dynamical properties and the transition graph.

Scoped checks look at the updates ``f^(s)`` for ``s`` ranging over one of:

* ``global``: ``s`` is the whole node set, i.e. ``f`` itself;
* ``singletons``: every ``{i}``;
* ``all-subsets``: every subset, scanned in colex order.

Witnesses are the first failing ``s`` followed by the smallest failing
configuration (or configuration pair, for bijectivity).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal, NamedTuple, Optional

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .core import (
    Network,
    NodeSet,
    check_size,
    decode,
    nodes_of,
    power_map,
)

Scope = Literal["global", "singletons", "all-subsets"]
SCOPES = ("global", "singletons", "all-subsets")

DEFAULT_MAX_WORK = 2**28


class OrbitReport(NamedTuple):
    transient: int
    period: int


@dataclass(frozen=True)
class ScopeVerdict:
    """``witness`` is ``(s, x)`` or, for bijectivity, ``(s, (x, x'))``."""

    holds: bool
    witness: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.holds


def pi(q: int) -> int:
    """``lcm(1, 2, ..., q)``."""
    if q < 2:
        raise ValueError("q must be >= 2")
    return math.lcm(*range(1, q + 1))


# ---------------------------------------------------------------------------
# orbits


def orbit_structure(images: np.ndarray) -> tuple[int, int]:
    """Transient length and period of a self-map given as an index array."""
    images = np.asarray(images, dtype=np.int64)
    size = images.shape[0]
    # Nodes on cycles are exactly those surviving repeated removal of
    # in-degree-zero nodes; the removal round gives each node's depth.
    indeg = np.bincount(images, minlength=size)
    alive = np.ones(size, dtype=bool)
    frontier = np.flatnonzero(indeg == 0)
    transient = 0
    while frontier.size:
        transient += 1
        alive[frontier] = False
        targets = images[frontier]
        np.subtract.at(indeg, targets, 1)
        cand = np.unique(targets)
        frontier = cand[(indeg[cand] == 0) & alive[cand]]
    period = 1
    seen = ~alive
    for start in np.flatnonzero(alive):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = images[x]
            length += 1
        period = math.lcm(period, length)
    return transient, period


def orbit_analysis(f: Network) -> OrbitReport:
    """Exact transient length and period of ``f`` on all ``q**n`` states."""
    t, p = orbit_structure(f.images)
    return OrbitReport(t, p)


# ---------------------------------------------------------------------------
# scoped checks


def _scope_masks(n: int, scope: str) -> list[int]:
    if scope == "global":
        return [(1 << n) - 1]
    if scope == "singletons":
        return [1 << j for j in range(n)]
    if scope == "all-subsets":
        return list(range(1 << n))
    raise ValueError(f"unknown scope {scope!r}; expected one of {SCOPES}")


def _scoped_maps(f: Network, scope: str, max_work: Optional[int]):
    masks = _scope_masks(f.n, scope)
    check_size(len(masks) * f.size, max_work, f"{scope} scan")
    base = np.arange(f.size, dtype=np.int64)
    membership = ((np.array(masks)[:, None] >> np.arange(f.n)[None, :]) & 1).astype(np.int64)
    return masks, base[None, :] + membership @ f.update_offsets.T


def check_dynamically_local(f: Network, scope: Scope = "global", max_work: Optional[int] = DEFAULT_MAX_WORK) -> ScopeVerdict:
    """Test ``g^(pi_q + q - 1) == g^(q - 1)`` for each scoped update ``g``."""
    hi, lo = pi(f.q) + f.q - 1, f.q - 1
    masks, maps = _scoped_maps(f, scope, max_work)
    for m, g in zip(masks, maps):
        bad = np.flatnonzero(power_map(g, hi) != power_map(g, lo))
        if bad.size:
            return ScopeVerdict(False, (nodes_of(m), decode(int(bad[0]), f.q, f.n)))
    return ScopeVerdict(True)


def _first_collision(g: np.ndarray) -> Optional[tuple[int, int]]:
    """Lexicographically smallest ``(a, b)``, ``a < b``, with ``g[a] == g[b]``."""
    idx = np.arange(g.shape[0])
    first = np.full(g.shape[0], g.shape[0])
    np.minimum.at(first, g, idx)
    dup = idx[first[g] < idx]
    if not dup.size:
        return None
    a = int(first[g[dup]].min())
    b = int(np.flatnonzero(g == g[a])[1])
    return a, b


def check_bijective(f: Network, scope: Scope = "global", max_work: Optional[int] = DEFAULT_MAX_WORK) -> ScopeVerdict:
    """Each scoped update must be a permutation; the witness is a colliding pair."""
    masks, maps = _scoped_maps(f, scope, max_work)
    for m, g in zip(masks, maps):
        pair = _first_collision(g)
        if pair is not None:
            a, b = pair
            return ScopeVerdict(False, (nodes_of(m), (decode(a, f.q, f.n), decode(b, f.q, f.n))))
    return ScopeVerdict(True)


def check_idempotent(f: Network, scope: Scope = "global", max_work: Optional[int] = DEFAULT_MAX_WORK) -> ScopeVerdict:
    masks, maps = _scoped_maps(f, scope, max_work)
    for m, g in zip(masks, maps):
        bad = np.flatnonzero(g[g] != g)
        if bad.size:
            return ScopeVerdict(False, (nodes_of(m), decode(int(bad[0]), f.q, f.n)))
    return ScopeVerdict(True)


# ---------------------------------------------------------------------------
# transition graph


@dataclass(frozen=True)
class ComponentDecomposition:
    """Weak components of the transition graph, as sorted tuples of indices.

    Components are listed by their smallest member. ``unreachable_fixed``
    holds the configurations forming singleton components.
    """

    components: tuple[tuple[int, ...], ...]
    fixed_points: tuple[int, ...]
    gardens_of_eden: tuple[int, ...]
    unreachable_fixed: tuple[int, ...]
    labels: np.ndarray = field(repr=False, compare=False)

    def reachable(self) -> tuple[int, ...]:
        """Configurations outside singleton components."""
        single = set(self.unreachable_fixed)
        return tuple(k for k in range(self.labels.shape[0]) if k not in single)

    def nontrivial(self) -> tuple[tuple[int, ...], ...]:
        return tuple(c for c in self.components if len(c) > 1)


def interval_arcs(f: Network) -> tuple[np.ndarray, np.ndarray]:
    """All arcs ``x -> f^(s)(x)``, as source and target index arrays.

    The targets out of ``x`` form the box spanned by ``x`` and ``f(x)``:
    every configuration agreeing with one of them on each coordinate.
    """
    offsets = f.update_offsets
    nz = offsets != 0
    cur_src = np.arange(f.size, dtype=np.int64)
    cur_dst = cur_src.copy()
    for j in range(f.n):
        rows = np.flatnonzero(nz[cur_src, j])
        if rows.size:
            s_new = cur_src[rows]
            d_new = cur_dst[rows] + offsets[s_new, j]
            cur_src = np.concatenate([cur_src, s_new])
            cur_dst = np.concatenate([cur_dst, d_new])
    keep = cur_src != cur_dst
    return cur_src[keep], cur_dst[keep]


def single_coordinate_arcs(f: Network) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Arcs ``x -> f^({i})(x)`` with ``f^({i})(x) != x``; returns sources, targets, nodes."""
    offsets = f.update_offsets
    xs, js = np.nonzero(offsets)
    return xs, xs + offsets[xs, js], js + 1


SMALL_GRAPH = 4096


def _weak_labels(size: int, src: np.ndarray, dst: np.ndarray) -> np.ndarray:
    """Label every vertex by the smallest vertex of its weak component."""
    if size > SMALL_GRAPH:
        adj = coo_matrix((np.ones(src.shape[0], dtype=np.int8), (src, dst)), shape=(size, size))
        _, raw = connected_components(adj, directed=True, connection="weak")
        first = np.full(raw.max() + 1, size, dtype=np.int64)
        np.minimum.at(first, raw, np.arange(size))
        return first[raw]
    # min-label hooking with pointer jumping; scipy's setup cost dominates here
    lab = np.arange(size, dtype=np.int64)
    while True:
        m = np.minimum(lab[src], lab[dst])
        new = lab.copy()
        np.minimum.at(new, lab[src], m)
        np.minimum.at(new, lab[dst], m)
        new = new[new]
        while True:
            nxt = new[new]
            if np.array_equal(nxt, new):
                break
            new = nxt
        if np.array_equal(new, lab):
            return lab
        lab = new


def components(f: Network, max_arcs: Optional[int] = 3**14) -> ComponentDecomposition:
    """Weakly connected components of the transition graph of ``f``."""
    counts = (f.update_offsets != 0).sum(axis=1)
    total = int(np.sum(2 ** counts.astype(np.int64)))
    check_size(total, max_arcs, "transition graph")
    src, dst = interval_arcs(f)
    labels = _weak_labels(f.size, src, dst)
    order = np.argsort(labels, kind="stable")
    splits = np.flatnonzero(np.diff(labels[order])) + 1
    comps = tuple(tuple(int(v) for v in grp) for grp in np.split(order, splits))
    images = f.images
    fixed = tuple(int(v) for v in np.flatnonzero(images == np.arange(f.size)))
    hit = np.zeros(f.size, dtype=bool)
    hit[images] = True
    eden = tuple(int(v) for v in np.flatnonzero(~hit))
    unreachable = tuple(c[0] for c in comps if len(c) == 1)
    labels.flags.writeable = False
    return ComponentDecomposition(comps, fixed, eden, unreachable, labels)


def unreachable_fixed_points(f: Network) -> frozenset[int]:
    """``U(f)``: fixed points that no update of another configuration reaches.

    Computed directly from arcs, independently of the component pass.
    """
    src, dst = interval_arcs(f)
    touched = np.zeros(f.size, dtype=bool)
    touched[src] = True
    touched[dst] = True
    return frozenset(int(v) for v in np.flatnonzero(~touched))

