"""Commutativity of updates, influences and supports.

Three levels of commutativity are decided exhaustively:

* ``pairwise``: ``f^(i,j) == f^(j,i)`` for all nodes ``i, j``;
* ``disjoint-subsets``: ``f^(s,t) == f^(t,s)`` for all disjoint ``s, t``;
* ``all-subsets``: ``f^(s,t) == f^(t,s)`` for all ``s, t``.

With ``strengthened=True`` the sequential update is compared against the
parallel one, ``f^(s,t) == f^(s | t)``, over ordered pairs. At the
``disjoint-subsets`` level the strengthened check covers disjoint ordered
pairs plus the diagonal ``s == t``, which makes it equivalent to the
all-subsets strengthened check.

On a finite node set all three plain levels agree: pairwise commutativity
implies commutativity of arbitrary blocks, and commutativity of disjoint
blocks implies it for overlapping ones through
``f^(s,t) = f^(s&t, s-t, t-s, s&t)``. Both routes are exposed so the
equivalence can be tested rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Literal, Optional, Sequence

import numpy as np

from .core import (
    ConfigLike,
    Configuration,
    Network,
    NetworkError,
    NodeSet,
    Schedule,
    as_configuration,
    check_size,
    decode,
    delta,
    digit_matrix,
    encode,
    nodes_of,
    place_values,
    schedule_network,
)

Level = Literal["pairwise", "disjoint-subsets", "all-subsets"]
LEVELS = ("pairwise", "disjoint-subsets", "all-subsets")

#: Default cap on ``pairs * q**n`` for an exhaustive commutativity sweep.
DEFAULT_MAX_WORK = 2**32


@dataclass(frozen=True)
class CommutativityVerdict:
    """Outcome of a commutativity check.

    ``witness`` is ``(s, t, x)`` when the property fails: the two node sets
    whose updates disagree at configuration ``x``. Among all failing
    triples it is the smallest by ``(colex(s), colex(t), index(x))``.
    """

    holds: bool
    witness: Optional[tuple[NodeSet, NodeSet, Configuration]] = None

    def __bool__(self) -> bool:
        return self.holds


def estimated_work(n: int, q: int, level: str) -> int:
    if level == "pairwise":
        return n * n * q**n
    if level == "disjoint-subsets":
        return 3**n * q**n
    if level == "all-subsets":
        return 4**n * q**n
    raise ValueError(f"unknown level {level!r}; expected one of {LEVELS}")


def _candidate_pairs(n: int, level: str, strengthened: bool):
    """Yield ``(s_mask, t_masks)`` in increasing colex order of ``s``."""
    full = 1 << n
    if level == "pairwise":
        singles = [1 << j for j in range(n)]
        for s in singles:
            if strengthened:
                yield s, np.array(singles)
            else:
                later = [t for t in singles if t > s]
                if later:
                    yield s, np.array(later)
        return
    t_all = np.arange(full)
    for s in range(1, full):
        if level == "disjoint-subsets":
            keep = (t_all & s) == 0
            if strengthened:
                keep |= t_all == s
            else:
                keep &= t_all > s
        elif strengthened:
            keep = np.ones(full, dtype=bool)
        else:
            keep = t_all > s
        keep[0] = False
        ts = t_all[keep]
        if ts.size:
            yield s, ts


def check_commutativity(
    f: Network,
    level: Level = "all-subsets",
    strengthened: bool = False,
    max_work: Optional[int] = DEFAULT_MAX_WORK,
) -> CommutativityVerdict:
    """Decide commutativity of updates at the given level.

    Raises :class:`~autonet.core.StateSpaceTooLarge` rather than sampling
    when ``pairs * q**n`` exceeds ``max_work``.
    """
    check_size(estimated_work(f.n, f.q, level), max_work, f"{level} commutativity")
    if level == "pairwise":
        offsets = f.update_offsets
        base = np.arange(f.size, dtype=np.int64)
        maps = np.zeros((1 << f.n, f.size), dtype=np.int64)
        maps[0] = base
        for j in range(f.n):
            maps[1 << j] = base + offsets[:, j]
        if strengthened:
            for a, b in combinations(range(f.n), 2):
                maps[(1 << a) | (1 << b)] = base + offsets[:, a] + offsets[:, b]
    else:
        maps = f.all_update_maps()

    for s, ts in _candidate_pairs(f.n, level, strengthened):
        s_then_t = maps[ts][:, maps[s]]
        if strengthened:
            other = maps[ts | s]
        else:
            other = maps[s][maps[ts]]
        bad = s_then_t != other
        rows = np.flatnonzero(bad.any(axis=1))
        if rows.size:
            r = rows[0]
            x = int(np.flatnonzero(bad[r])[0])
            return CommutativityVerdict(False, (nodes_of(s), nodes_of(int(ts[r])), decode(x, f.q, f.n)))
    return CommutativityVerdict(True)


def check_global_commutative_fast(f: Network, max_work: Optional[int] = DEFAULT_MAX_WORK) -> CommutativityVerdict:
    """Global commutativity via the pairwise test.

    Every local function of a finite network has finite influences, so
    pairwise commutativity already forces commutativity of arbitrary
    updates. :func:`check_commutativity` with ``"all-subsets"`` is the
    direct route.
    """
    return check_commutativity(f, "pairwise", max_work=max_work)


def schedule_invariance(f: Network, schedule: Schedule | Sequence) -> bool:
    """True iff applying ``f`` block by block along ``schedule`` gives ``f`` back."""
    return schedule_network(f, schedule) == f


# ---------------------------------------------------------------------------
# influences


def _mix(x: Configuration, y: Configuration, u: NodeSet) -> Configuration:
    return tuple(y[i] if (i + 1) in u else x[i] for i in range(len(x)))


def influences(f: Network, i: int, x: ConfigLike, y: ConfigLike) -> tuple[NodeSet, ...]:
    """All minimal node sets ``u`` with ``f_i(x outside u, y on u) == f_i(y)``.

    Candidates are drawn from the disagreement set of ``x`` and ``y`` by
    increasing size; supersets of an influence already found are skipped,
    so every set returned is minimal. The result is ordered by size, then
    lexicographically.
    """
    if not 1 <= i <= f.n:
        raise NetworkError(f"node {i} outside 1..{f.n}")
    x = as_configuration(x, f.q, f.n)
    y = as_configuration(y, f.q, f.n)
    col = f.image_digits[:, i - 1]
    target = col[encode(y, f.q)]
    diff = sorted(delta(x, y))
    found: list[NodeSet] = []
    for k in range(len(diff) + 1):
        for combo in combinations(diff, k):
            u = frozenset(combo)
            if any(v <= u for v in found):
                continue
            if col[encode(_mix(x, y, u), f.q)] == target:
                found.append(u)
        if found and not found[0]:
            break
    return tuple(found)


def support(f: Network, i: int) -> NodeSet:
    """Nodes ``j`` on which ``f_i`` essentially depends."""
    if not 1 <= i <= f.n:
        raise NetworkError(f"node {i} outside 1..{f.n}")
    digits = digit_matrix(f.q, f.n)
    col = f.image_digits[:, i - 1]
    base = np.arange(f.size, dtype=np.int64)
    place = place_values(f.q, f.n)
    out = set()
    for j in range(f.n):
        for v in range(f.q):
            moved = base + (v - digits[:, j]) * place[j]
            if np.any(col[moved] != col):
                out.add(j + 1)
                break
    return frozenset(out)


def max_influence_size(f: Network, i: int, max_work: Optional[int] = 2**24) -> int:
    """Largest minimal influence of ``f_i`` over all ordered pairs ``(x, y)``.

    A finite-network stand-in for the bounded-influence property: the
    value never exceeds ``len(support(f, i))``.
    """
    check_size(f.size * f.size * 2**f.n, max_work, "influence scan")
    best = 0
    for a in range(f.size):
        x = decode(a, f.q, f.n)
        for b in range(f.size):
            for u in influences(f, i, x, decode(b, f.q, f.n)):
                best = max(best, len(u))
    return best
