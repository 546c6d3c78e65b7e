"""Partitions of the Boolean cube into subcubes, and the bijective commutative networks they index."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Iterator

import numpy as np

from ..core import Network, NetworkError
from .subcube import Subcube

MAX_COUNT_N = 5
MAX_LIST_N = 4


@lru_cache(maxsize=None)
def _cubes_by_point(n: int) -> tuple[tuple[int, ...], ...]:
    """For each point, the point-set bitmasks of all subcubes containing it."""
    full = (1 << n) - 1
    out = []
    for p in range(1 << n):
        masks = []
        for free in range(1 << n):
            masks.append(Subcube(n, full & ~free, p & ~free).point_mask())
        out.append(tuple(sorted(masks)))
    return tuple(out)


def _lowest_gap(covered: int) -> int:
    return (~covered & (covered + 1)).bit_length() - 1


def _counter(n: int):
    cubes = _cubes_by_point(n)
    done = (1 << (1 << n)) - 1

    @lru_cache(maxsize=None)
    def count(covered: int) -> int:
        if covered == done:
            return 1
        p = _lowest_gap(covered)
        return sum(count(covered | c) for c in cubes[p] if not c & covered)

    return count


def _count_branch(args: tuple[int, int]) -> int:
    n, first = args
    return _counter(n)(first)


def enumerate_cube_partitions(n: int, listing: bool = False, workers: int = 1):
    """Number of partitions of ``{0,1}^n`` into subcubes.

    Backtracks over the subcubes containing the least uncovered point,
    memoising on the covered set. With ``listing=True`` returns
    ``(count, partitions)`` where each partition is a list of subcubes.
    ``workers > 1`` splits the first branching level across processes.
    """
    if n < 0 or n > MAX_COUNT_N:
        raise NetworkError(f"cube partitions are counted for 0 <= n <= {MAX_COUNT_N}")
    if listing:
        parts = list(iter_cube_partitions(n))
        return len(parts), parts
    if workers > 1:
        first = _cubes_by_point(n)[0]
        with ProcessPoolExecutor(workers) as pool:
            return sum(pool.map(_count_branch, [(n, c) for c in first]))
    return _counter(n)(0)


def iter_cube_partitions(n: int) -> Iterator[list[Subcube]]:
    if n < 0 or n > MAX_LIST_N:
        raise NetworkError(f"cube partitions are listed for 0 <= n <= {MAX_LIST_N}")
    full = (1 << n) - 1
    done = (1 << (1 << n)) - 1
    options = []
    for p in range(1 << n):
        row = []
        for free in range(1 << n):
            c = Subcube(n, full & ~free, p & ~free)
            row.append((c.point_mask(), c))
        row.sort(key=lambda t: t[0])
        options.append(row)

    def rec(covered: int, chosen: list[Subcube]):
        if covered == done:
            yield list(chosen)
            return
        p = _lowest_gap(covered)
        for mask, cube in options[p]:
            if not mask & covered:
                chosen.append(cube)
                yield from rec(covered | mask, chosen)
                chosen.pop()

    yield from rec(0, [])


def negation_on_partition(parts: list[Subcube]) -> Network:
    """Flip every free coordinate of the part containing each configuration."""
    n = parts[0].n
    full = (1 << n) - 1
    images = np.empty(1 << n, dtype=np.int64)
    for c in parts:
        flip = full & ~c.care
        for p in c.points():
            images[p] = p ^ flip
    return Network(2, n, images)


def enumerate_bijective_cs(n: int) -> list[Network]:
    """One network per cube partition: the union of negations on its parts."""
    if n < 1 or n > MAX_LIST_N:
        raise NetworkError(f"bijective commutative networks are enumerated for 1 <= n <= {MAX_LIST_N}")
    return [negation_on_partition(p) for p in iter_cube_partitions(n)]


#: Published values of the cube-partition count for n = 0..5, kept only for
#: an optional comparison; tests check against an in-repo brute force.
REFERENCE_COUNTS: tuple[int, ...] = (1, 2, 8, 154, 89512, 71319425714)
