"""Arrangements of subcubes and the dimension taxonomy of point sets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Optional

from ..core import NetworkError, NodeSet
from .subcube import PointLike, Subcube, bit, contains, intersect, point_set

DimensionClass = Literal["external", "free", "tight"]


class ArrangementError(NetworkError):
    """A family of subcubes violates the arrangement axioms.

    ``pair`` holds the indices of the first offending pair of cubes.
    """

    def __init__(self, message: str, pair: tuple[int, int]):
        super().__init__(message)
        self.pair = pair


@dataclass(frozen=True)
class Arrangement:
    """Pairwise intersecting, containment-free family of subcubes.

    Build through :func:`validate_arrangement`.
    """

    cubes: tuple[Subcube, ...]

    @property
    def n(self) -> int:
        return self.cubes[0].n

    def content(self) -> frozenset[int]:
        pts: set[int] = set()
        for c in self.cubes:
            pts.update(c.points())
        return frozenset(pts)

    def __iter__(self):
        return iter(self.cubes)

    def __len__(self) -> int:
        return len(self.cubes)

    def patterns(self) -> list[str]:
        return [c.pattern for c in self.cubes]


def validate_arrangement(cubes: Iterable[Subcube | str]) -> Arrangement:
    cubes = tuple(Subcube.from_pattern(c) if isinstance(c, str) else c for c in cubes)
    if not cubes:
        raise NetworkError("an arrangement needs at least one subcube")
    n = cubes[0].n
    if any(c.n != n for c in cubes):
        raise NetworkError("subcubes of an arrangement must share the dimension n")
    for a in range(len(cubes)):
        for b in range(a + 1, len(cubes)):
            if intersect(cubes[a], cubes[b]) is None:
                raise ArrangementError(f"subcubes {cubes[a]} and {cubes[b]} are disjoint", (a, b))
            if contains(cubes[a], cubes[b]) or contains(cubes[b], cubes[a]):
                raise ArrangementError(f"subcubes {cubes[a]} and {cubes[b]} are nested", (a, b))
    return Arrangement(cubes)


# ---------------------------------------------------------------------------
# dimensions


@dataclass(frozen=True)
class DimensionReport:
    external: NodeSet
    free: NodeSet
    tight: NodeSet
    intersection: Subcube
    enclosing: Subcube
    borders: dict[int, frozenset[int]]


def _borders(content: frozenset[int], n: int, i: int) -> frozenset[int]:
    b = bit(n, i)
    return frozenset(z ^ b for z in content if z ^ b not in content)


def dimension_report(arrangement: Arrangement) -> DimensionReport:
    """Dimensions of the content, read off the supports of the cubes."""
    n = arrangement.n
    full = (1 << n) - 1
    inner_care = full
    outer_care = 0
    value = 0
    for c in arrangement:
        inner_care &= c.care
        outer_care |= c.care
        value |= c.value
    nodes = range(1, n + 1)
    external = frozenset(i for i in nodes if inner_care & bit(n, i))
    free = frozenset(i for i in nodes if not outer_care & bit(n, i))
    tight = frozenset(nodes) - external - free
    content = arrangement.content()
    return DimensionReport(
        external=external,
        free=free,
        tight=tight,
        intersection=Subcube(n, outer_care, value),
        enclosing=Subcube(n, inner_care, value & inner_care),
        borders={i: _borders(content, n, i) for i in sorted(tight)},
    )


@dataclass(frozen=True)
class SetDimensions:
    classes: dict[int, DimensionClass]
    borders: dict[int, frozenset[int]]

    def of(self, kind: DimensionClass) -> NodeSet:
        return frozenset(i for i, k in self.classes.items() if k == kind)


def classify_set_dimensions(points: Iterable[PointLike], n: int) -> SetDimensions:
    """External, free or tight, straight from the definitions."""
    C = point_set(points, n)
    if not C:
        raise NetworkError("cannot classify the dimensions of an empty set")
    classes: dict[int, DimensionClass] = {}
    borders: dict[int, frozenset[int]] = {}
    for i in range(1, n + 1):
        b = bit(n, i)
        if len({x & b for x in C}) == 1:
            classes[i] = "external"
        elif all(x ^ b in C for x in C):
            classes[i] = "free"
        else:
            classes[i] = "tight"
            borders[i] = _borders(C, n, i)
    return SetDimensions(classes, borders)


# ---------------------------------------------------------------------------
# maximal subcubes and arrangement contents


def maximal_subcubes(points: Iterable[PointLike], n: int) -> list[Subcube]:
    """Inclusion-maximal subcubes inside a point set (its prime implicants).

    Quine-McCluskey style merging: two cubes with the same support whose
    values differ in a single bit merge into a cube one dimension larger.
    Ordered by decreasing dimension, then by ``(care, value)``.
    """
    C = point_set(points, n)
    if not C:
        return []
    full = (1 << n) - 1
    level = {(full, x) for x in C}
    primes: set[tuple[int, int]] = set()
    while level:
        merged: set[tuple[int, int]] = set()
        used: set[tuple[int, int]] = set()
        for care, value in level:
            b = care
            while b:
                low = b & -b
                b ^= low
                partner = (care, value ^ low)
                if partner in level:
                    used.add((care, value))
                    merged.add((care & ~low, value & ~low))
        primes |= level - used
        level = merged
    cubes = [Subcube(n, care, value) for care, value in primes]
    cubes.sort(key=lambda c: (-c.dimension, c.care, c.value))
    return cubes


def _star_center(C: frozenset[int], n: int) -> Optional[int]:
    """Smallest ``y`` in ``C`` such that every interval from a point of ``C`` to ``y`` stays in ``C``.

    An interval ``[x, y]`` lies in ``C`` iff, inductively, every neighbour of
    ``x`` one step closer to ``y`` does; so a single-step closure test
    over all ``x`` suffices.
    """
    for y in sorted(C):
        ok = True
        for x in C:
            d = x ^ y
            while d:
                low = d & -d
                d ^= low
                if x ^ low not in C:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return y
    return None


def is_arrangement_content(points: Iterable[PointLike], n: int) -> Optional[Arrangement]:
    """An arrangement whose content is exactly the given set, if one exists.

    A nonempty set is a content iff some point ``y`` of it sees every other
    point through an interval inside the set: the cubes of an arrangement
    share a common point, and conversely intervals through ``y`` pairwise
    meet at ``y``. The witness is the family of maximal such intervals.
    """
    C = point_set(points, n)
    if not C:
        return None
    y = _star_center(C, n)
    if y is None:
        return None
    full = (1 << n) - 1
    spans = {full & ~(x ^ y) for x in C}
    cubes = [Subcube(n, care, y & care) for care in spans]
    maximal = [c for c in cubes if not any(d != c and contains(d, c) for d in cubes)]
    maximal.sort(key=lambda c: (-c.dimension, c.care, c.value))
    return Arrangement(tuple(maximal))
