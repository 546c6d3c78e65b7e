"""Vectorised property checks over stacks of networks sharing ``(q, n)``.

``images`` is an integer array of shape ``(B, q**n)``; row ``b`` is the
table of one network. Every function returns a boolean array of length
``B``. These are the workhorses of the exhaustive sweeps; they agree with
the per-network checkers in :mod:`autonet.commutativity` and
:mod:`autonet.dynamics` (tests compare them directly), but do not produce
witnesses.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .commutativity import _candidate_pairs
from .core import digit_matrix, place_values
from .dynamics import _scope_masks, pi


def _take(a: np.ndarray, idx: np.ndarray) -> np.ndarray:
    return np.take_along_axis(a, idx, axis=-1)


def batch_offsets(images: np.ndarray, q: int, n: int) -> np.ndarray:
    d = digit_matrix(q, n)
    return (d[images] - d[None, :, :]) * place_values(q, n)


def batch_update_maps(images: np.ndarray, q: int, n: int, masks) -> np.ndarray:
    """Shape ``(B, len(masks), q**n)``: the images of each ``f^(s)``."""
    masks = np.asarray(masks, dtype=np.int64)
    member = (masks[:, None] >> np.arange(n)[None, :]) & 1
    off = batch_offsets(images, q, n)
    base = np.arange(q**n, dtype=np.int64)
    return base[None, None, :] + np.einsum("bxj,mj->bmx", off, member)


def _pair_arrays(n: int, level: str, strengthened: bool):
    S, T = [], []
    for s, ts in _candidate_pairs(n, level, strengthened):
        S.extend([s] * len(ts))
        T.extend(int(t) for t in ts)
    return np.array(S, dtype=np.int64), np.array(T, dtype=np.int64)


def batch_commutativity(images: np.ndarray, q: int, n: int, level: str = "all-subsets",
                        strengthened: bool = False, pair_chunk: int = 64) -> np.ndarray:
    images = np.asarray(images, dtype=np.int64)
    S, T = _pair_arrays(n, level, strengthened)
    ok = np.ones(images.shape[0], dtype=bool)
    if S.size == 0:
        return ok
    needed = np.unique(np.concatenate([S, T, S | T]))
    pos = {int(m): k for k, m in enumerate(needed)}
    maps = batch_update_maps(images, q, n, needed)
    for lo in range(0, S.size, pair_chunk):
        s = np.array([pos[int(v)] for v in S[lo:lo + pair_chunk]])
        t = np.array([pos[int(v)] for v in T[lo:lo + pair_chunk]])
        st = _take(maps[:, t], maps[:, s])
        if strengthened:
            u = np.array([pos[int(v)] for v in (S[lo:lo + pair_chunk] | T[lo:lo + pair_chunk])])
            other = maps[:, u]
        else:
            other = _take(maps[:, s], maps[:, t])
        ok &= (st == other).all(axis=(1, 2))
    return ok


def _batch_power(g: np.ndarray, m: int) -> np.ndarray:
    result = np.broadcast_to(np.arange(g.shape[-1]), g.shape).copy()
    base = g
    while m:
        if m & 1:
            result = _take(base, result)
        m >>= 1
        if m:
            base = _take(base, base)
    return result


def batch_dynamically_local(images: np.ndarray, q: int, n: int, scope: str = "global") -> np.ndarray:
    maps = batch_update_maps(np.asarray(images, dtype=np.int64), q, n, _scope_masks(n, scope))
    hi = _batch_power(maps, pi(q) + q - 1)
    lo = _batch_power(maps, q - 1)
    return (hi == lo).all(axis=(1, 2))


def batch_bijective(images: np.ndarray, q: int, n: int, scope: str = "global") -> np.ndarray:
    maps = batch_update_maps(np.asarray(images, dtype=np.int64), q, n, _scope_masks(n, scope))
    srt = np.sort(maps, axis=-1)
    return (np.diff(srt, axis=-1) != 0).all(axis=(1, 2))


def batch_idempotent(images: np.ndarray, q: int, n: int, scope: str = "global") -> np.ndarray:
    maps = batch_update_maps(np.asarray(images, dtype=np.int64), q, n, _scope_masks(n, scope))
    return (_take(maps, maps) == maps).all(axis=(1, 2))


# ---------------------------------------------------------------------------
# network spaces


def boolean_network_count(n: int) -> int:
    return 1 << (n * (1 << n))


def boolean_networks(n: int, start: int, stop: int) -> np.ndarray:
    """Tables of the Boolean networks numbered ``start..stop-1``.

    Network ``k`` maps configuration ``c`` to ``(k >> (n * c)) & (2**n - 1)``.
    """
    ids = np.arange(start, stop, dtype=np.int64)
    shifts = n * np.arange(1 << n, dtype=np.int64)
    return (ids[:, None] >> shifts[None, :]) & ((1 << n) - 1)


def boolean_network_blocks(n: int, block: int = 1 << 16) -> Iterator[tuple[int, np.ndarray]]:
    total = boolean_network_count(n)
    for start in range(0, total, block):
        yield start, boolean_networks(n, start, min(total, start + block))


def random_tables(q: int, n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    return rng.integers(0, q**n, size=(count, q**n), dtype=np.int64)


def sparse_tables(q: int, n: int, count: int, rng: np.random.Generator,
                  max_deps: int = 2, p_trivial: float = 0.5) -> np.ndarray:
    """Random tables whose local functions read few nodes.

    Each ``f_i`` is left trivial with probability ``p_trivial``; otherwise
    it is a uniformly random function of a few nodes, usually including
    node ``i`` itself. Such networks are often locally commutative, which
    uniform tables almost never are.
    """
    d = digit_matrix(q, n)
    out = np.empty((count, q**n, n), dtype=np.int64)
    for b in range(count):
        for i in range(n):
            if rng.random() < p_trivial:
                out[b, :, i] = d[:, i]
                continue
            others = [j for j in range(n) if j != i]
            k = int(rng.integers(0, min(max_deps, n - 1) + 1))
            deps = [i] + [int(j) for j in rng.choice(others, size=k, replace=False)] if k else [i]
            if len(deps) > 1 and rng.random() < 0.3:
                deps = deps[1:]
            key = d[:, deps] @ (q ** np.arange(len(deps)))
            out[b, :, i] = rng.integers(0, q, size=q ** len(deps))[key]
    return out @ place_values(q, n)


def table_of_id(n: int, k: int) -> np.ndarray:
    return boolean_networks(n, k, k + 1)[0]


def id_of_table(n: int, images) -> int:
    return sum(int(v) << (n * c) for c, v in enumerate(images))
