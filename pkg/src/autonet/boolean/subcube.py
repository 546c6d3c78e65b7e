"""Subcubes of the Boolean cube ``{0,1}^n``.

Configurations are handled as canonical indices, so node ``i`` is bit
``n - i`` of an index. A subcube stores a ``care`` mask (the fixed bits)
and the ``value`` those bits take.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

from ..core import NetworkError, NodeSet, as_configuration, decode, encode

PointLike = Union[int, str, Sequence[int]]


def bit(n: int, i: int) -> int:
    """Index bit of node ``i``."""
    return 1 << (n - i)


def to_index(x: PointLike, n: int) -> int:
    if isinstance(x, (int,)) and not isinstance(x, bool):
        if not 0 <= x < 1 << n:
            raise NetworkError(f"index {x} outside the {n}-cube")
        return x
    return encode(as_configuration(x, 2, n), 2)


def point_set(points: Iterable[PointLike], n: int) -> frozenset[int]:
    return frozenset(to_index(x, n) for x in points)


@dataclass(frozen=True)
class Subcube:
    """The set ``{x : x_s = alpha}`` for a support ``s`` and values ``alpha``."""

    n: int
    care: int
    value: int

    def __post_init__(self):
        full = (1 << self.n) - 1
        if self.care & ~full or self.value & ~self.care:
            raise NetworkError("subcube value bits must lie inside its support")

    @classmethod
    def from_assignment(cls, n: int, values: Mapping[int, int]) -> "Subcube":
        care = value = 0
        for i, v in values.items():
            if not 1 <= i <= n or v not in (0, 1):
                raise NetworkError(f"bad subcube assignment x{i}={v}")
            care |= bit(n, i)
            value |= v * bit(n, i)
        return cls(n, care, value)

    @classmethod
    def from_pattern(cls, pattern: str) -> "Subcube":
        """Parse ``"1*0"``: x1 = 1, x2 free, x3 = 0."""
        n = len(pattern)
        if n == 0 or set(pattern) - set("01*"):
            raise NetworkError(f"subcube pattern {pattern!r} must use only 0, 1 and *")
        return cls.from_assignment(n, {i + 1: int(c) for i, c in enumerate(pattern) if c != "*"})

    @classmethod
    def whole(cls, n: int) -> "Subcube":
        return cls(n, 0, 0)

    @classmethod
    def point(cls, n: int, x: PointLike) -> "Subcube":
        return cls(n, (1 << n) - 1, to_index(x, n))

    @property
    def support(self) -> NodeSet:
        return frozenset(i for i in range(1, self.n + 1) if self.care & bit(self.n, i))

    @property
    def values(self) -> dict[int, int]:
        return {i: int(bool(self.value & bit(self.n, i))) for i in sorted(self.support)}

    @property
    def dimension(self) -> int:
        return self.n - bin(self.care).count("1")

    @property
    def pattern(self) -> str:
        out = []
        for i in range(1, self.n + 1):
            b = bit(self.n, i)
            out.append(("1" if self.value & b else "0") if self.care & b else "*")
        return "".join(out)

    def points(self) -> list[int]:
        free = ((1 << self.n) - 1) & ~self.care
        out = []
        sub = free
        while True:
            out.append(self.value | sub)
            if sub == 0:
                break
            sub = (sub - 1) & free
        return sorted(out)

    def point_mask(self) -> int:
        """The point set as a bitmask over the ``2**n`` indices."""
        m = 0
        for p in self.points():
            m |= 1 << p
        return m

    def member(self, x: PointLike) -> bool:
        return to_index(x, self.n) & self.care == self.value

    def __contains__(self, x) -> bool:
        return self.member(x)

    def __len__(self) -> int:
        return 1 << self.dimension

    def __str__(self) -> str:
        return self.pattern


def member(cube: Subcube, x: PointLike) -> bool:
    return cube.member(x)


def intersect(a: Subcube, b: Subcube) -> Subcube | None:
    """The intersection subcube, or ``None`` when the cubes are disjoint."""
    common = a.care & b.care
    if (a.value ^ b.value) & common:
        return None
    return Subcube(a.n, a.care | b.care, a.value | b.value)


def contains(a: Subcube, b: Subcube) -> bool:
    """True iff ``b`` is a subset of ``a``."""
    return a.care & ~b.care == 0 and b.value & a.care == a.value


def interval(x: PointLike, y: PointLike, n: int | None = None) -> Subcube:
    """Smallest subcube containing both ``x`` and ``y``."""
    if n is None:
        if isinstance(x, int) or isinstance(y, int):
            raise TypeError("n is required when points are given as indices")
        n = len(x)
    a, b = to_index(x, n), to_index(y, n)
    care = ((1 << n) - 1) & ~(a ^ b)
    return Subcube(n, care, a & care)


def describe(cube: Subcube) -> str:
    vals = cube.values
    if not vals:
        return "{whole cube}"
    return "{" + ", ".join(f"x{i}={v}" for i, v in vals.items()) + "}"


def index_config(k: int, n: int) -> tuple[int, ...]:
    return decode(k, 2, n)
