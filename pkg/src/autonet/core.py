"""Configurations, networks and update semantics.

A network over an alphabet ``{0, ..., q-1}`` on nodes ``1..n`` is stored as a
dense table: ``images[k]`` is the canonical index of ``f(decode(k))``. The
canonical index of a configuration is big-endian, node 1 being the most
significant digit.

Node sets are plain ``frozenset`` objects of 1-based node labels. When node
sets are ordered (witness tie-breaking, scoped scans) the order is colex,
i.e. the order of the bitmask ``sum(1 << (i - 1) for i in s)``.
"""

from __future__ import annotations

import math
from functools import cached_property, lru_cache
from typing import Callable, Iterable, Iterator, Sequence, Union

import numpy as np

Configuration = tuple[int, ...]
NodeSet = frozenset
ConfigLike = Union[str, Sequence[int]]

#: Largest dense table accepted by :class:`Network`.
MAX_TABLE_SIZE = 2**24


class NetworkError(ValueError):
    """Malformed network, configuration, node set or schedule."""


class StateSpaceTooLarge(RuntimeError):
    """An exhaustive sweep would exceed the configured work cap."""


# ---------------------------------------------------------------------------
# encoding


@lru_cache(maxsize=None)
def place_values(q: int, n: int) -> np.ndarray:
    out = np.array([q ** (n - 1 - j) for j in range(n)], dtype=np.int64)
    out.flags.writeable = False
    return out


@lru_cache(maxsize=64)
def digit_matrix(q: int, n: int) -> np.ndarray:
    """Row ``k`` holds the digits of configuration ``k``; shape ``(q**n, n)``."""
    idx = np.arange(q**n, dtype=np.int64)
    out = (idx[:, None] // place_values(q, n)[None, :]) % q
    out.flags.writeable = False
    return out


def encode(x: Sequence[int], q: int) -> int:
    k = 0
    for d in x:
        k = k * q + int(d)
    return k


def decode(k: int, q: int, n: int) -> Configuration:
    out = []
    for _ in range(n):
        k, d = divmod(k, q)
        out.append(d)
    return tuple(reversed(out))


def as_configuration(x: ConfigLike, q: int, n: int) -> Configuration:
    """Normalise a digit string or integer sequence and validate it."""
    if isinstance(x, str):
        if not x.isdigit():
            raise NetworkError(f"configuration {x!r} must be a string of digits")
        x = [int(c) for c in x]
    x = tuple(int(v) for v in x)
    if len(x) != n:
        raise NetworkError(f"configuration {x} has length {len(x)}, expected {n}")
    if any(v < 0 or v >= q for v in x):
        raise NetworkError(f"configuration {x} has symbols outside [0, {q})")
    return x


def config_str(x: Sequence[int]) -> str:
    return "".join(str(v) for v in x)


# ---------------------------------------------------------------------------
# node sets


def node_set(nodes: Iterable[int], n: int) -> NodeSet:
    s = frozenset(int(i) for i in nodes)
    bad = [i for i in s if i < 1 or i > n]
    if bad:
        raise NetworkError(f"nodes {sorted(bad)} outside 1..{n}")
    return s


def mask_of(s: Iterable[int]) -> int:
    """Colex bitmask of a node set (node ``i`` is bit ``i - 1``)."""
    m = 0
    for i in s:
        m |= 1 << (i - 1)
    return m


def nodes_of(mask: int) -> NodeSet:
    return frozenset(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def all_node_sets(n: int) -> Iterator[NodeSet]:
    """Every subset of ``1..n`` in colex order."""
    for m in range(1 << n):
        yield nodes_of(m)


@lru_cache(maxsize=32)
def subset_membership(n: int) -> np.ndarray:
    """Row ``m`` is the 0/1 indicator of the node set with colex mask ``m``."""
    m = np.arange(1 << n, dtype=np.int64)
    out = (m[:, None] >> np.arange(n, dtype=np.int64)[None, :]) & 1
    out.flags.writeable = False
    return out


def format_node_set(s: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(s)) + "}"


def delta(x: Sequence[int], y: Sequence[int]) -> NodeSet:
    """Disagreement set ``{i : x_i != y_i}`` (1-based)."""
    if len(x) != len(y):
        raise NetworkError(f"configurations of lengths {len(x)} and {len(y)}")
    return frozenset(i + 1 for i, (a, b) in enumerate(zip(x, y)) if a != b)


# ---------------------------------------------------------------------------
# networks


class Network:
    """A total map ``f : Q^n -> Q^n`` stored as a table of image indices.

    Instances are immutable and hashable; two networks are equal when they
    share ``q``, ``n`` and the table.
    """

    __slots__ = ("q", "n", "images", "__dict__")

    def __init__(self, q: int, n: int, images: Sequence[int] | np.ndarray):
        if q < 2:
            raise NetworkError(f"alphabet size must be >= 2, got {q}")
        if n < 1:
            raise NetworkError(f"node count must be >= 1, got {n}")
        size = q**n
        if size > MAX_TABLE_SIZE:
            raise StateSpaceTooLarge(f"q**n = {size} exceeds the dense-table cap {MAX_TABLE_SIZE}")
        arr = np.array(images, dtype=np.int64).reshape(-1)
        if arr.shape[0] != size:
            raise NetworkError(f"expected {size} entries, got {arr.shape[0]}")
        if arr.size and (arr.min() < 0 or arr.max() >= size):
            raise NetworkError("table entries must be configuration indices in [0, q**n)")
        arr.flags.writeable = False
        self.q = q
        self.n = n
        self.images = arr

    # constructors ---------------------------------------------------------

    @classmethod
    def from_table(cls, q: int, n: int, table: Iterable[ConfigLike]) -> "Network":
        """Build from ``q**n`` configurations listed in canonical index order."""
        rows = [as_configuration(x, q, n) for x in table]
        if len(rows) != q**n:
            raise NetworkError(f"expected {q**n} entries, got {len(rows)}")
        return cls(q, n, [encode(r, q) for r in rows])

    @classmethod
    def from_function(cls, q: int, n: int, fn: Callable[[Configuration], Sequence[int]]) -> "Network":
        images = []
        for k in range(q**n):
            images.append(encode(as_configuration(fn(decode(k, q, n)), q, n), q))
        return cls(q, n, images)

    @classmethod
    def from_local_functions(cls, q: int, n: int, local: Sequence[Callable[[Configuration], int]]) -> "Network":
        if len(local) != n:
            raise NetworkError(f"expected {n} local functions, got {len(local)}")
        return cls.from_function(q, n, lambda x: [g(x) for g in local])

    @classmethod
    def from_digits(cls, q: int, n: int, digits: np.ndarray) -> "Network":
        """Build from an image digit matrix of shape ``(q**n, n)``."""
        return cls(q, n, np.asarray(digits, dtype=np.int64) @ place_values(q, n))

    @classmethod
    def identity(cls, q: int, n: int) -> "Network":
        return cls(q, n, np.arange(q**n))

    @classmethod
    def constant(cls, q: int, n: int, value: ConfigLike) -> "Network":
        k = encode(as_configuration(value, q, n), q)
        return cls(q, n, np.full(q**n, k))

    @classmethod
    def negation(cls, n: int) -> "Network":
        size = 2**n
        return cls(2, n, (size - 1) - np.arange(size))

    # views ----------------------------------------------------------------

    @property
    def size(self) -> int:
        return self.images.shape[0]

    @property
    def table(self) -> tuple[Configuration, ...]:
        return tuple(tuple(int(v) for v in row) for row in self.image_digits)

    @cached_property
    def image_digits(self) -> np.ndarray:
        out = digit_matrix(self.q, self.n)[self.images]
        out.flags.writeable = False
        return out

    @cached_property
    def update_offsets(self) -> np.ndarray:
        """``offsets[x, j]``: index change produced by updating node ``j + 1`` at ``x``.

        ``f^(s)(x)`` then has index ``x + sum(offsets[x, j] for j + 1 in s)``.
        """
        d = digit_matrix(self.q, self.n)
        out = (self.image_digits - d) * place_values(self.q, self.n)[None, :]
        out.flags.writeable = False
        return out

    def local(self, i: int, x: ConfigLike) -> int:
        """Value of the local function ``f_i`` at ``x``."""
        x = as_configuration(x, self.q, self.n)
        if not 1 <= i <= self.n:
            raise NetworkError(f"node {i} outside 1..{self.n}")
        return int(self.image_digits[encode(x, self.q), i - 1])

    def update_map(self, s: Iterable[int]) -> np.ndarray:
        """Image indices of ``f^(s)`` over all configurations."""
        cols = sorted(node_set(s, self.n))
        base = np.arange(self.size, dtype=np.int64)
        if not cols:
            return base
        return base + self.update_offsets[:, [c - 1 for c in cols]].sum(axis=1)

    def all_update_maps(self) -> np.ndarray:
        """Row ``m`` holds the images of ``f^(s)`` for the node set with colex mask ``m``."""
        return np.arange(self.size, dtype=np.int64)[None, :] + subset_membership(self.n) @ self.update_offsets.T

    # protocol -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Network):
            return NotImplemented
        return self.q == other.q and self.n == other.n and np.array_equal(self.images, other.images)

    def __hash__(self) -> int:
        return hash((self.q, self.n, self.images.tobytes()))

    def __repr__(self) -> str:
        if self.size <= 16:
            body = ",".join(config_str(r) for r in self.table)
            return f"Network(q={self.q}, n={self.n}, table=[{body}])"
        return f"Network(q={self.q}, n={self.n}, size={self.size})"


def _same_shape(f: Network, g: Network) -> None:
    if (f.q, f.n) != (g.q, g.n):
        raise NetworkError(f"networks over (q={f.q}, n={f.n}) and (q={g.q}, n={g.n})")


# ---------------------------------------------------------------------------
# schedules


class Schedule:
    """An ordered partition of ``1..n``; empty blocks are allowed."""

    __slots__ = ("n", "blocks")

    def __init__(self, n: int, blocks: Iterable[Iterable[int]]):
        blocks = tuple(node_set(b, n) for b in blocks)
        seen: set[int] = set()
        for b in blocks:
            overlap = seen & b
            if overlap:
                raise NetworkError(f"schedule blocks overlap on {sorted(overlap)}")
            seen |= b
        missing = set(range(1, n + 1)) - seen
        if missing:
            raise NetworkError(f"schedule does not cover nodes {sorted(missing)}")
        self.n = n
        self.blocks = blocks

    @classmethod
    def sequential(cls, order: Sequence[int]) -> "Schedule":
        return cls(len(order), [{i} for i in order])

    @classmethod
    def parallel(cls, n: int) -> "Schedule":
        return cls(n, [range(1, n + 1)])

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Schedule) and (self.n, self.blocks) == (other.n, other.blocks)

    def __hash__(self) -> int:
        return hash((self.n, self.blocks))

    def __repr__(self) -> str:
        return "Schedule(" + ", ".join(format_node_set(b) for b in self.blocks) + ")"


# ---------------------------------------------------------------------------
# operations


def apply(f: Network, x: ConfigLike) -> Configuration:
    x = as_configuration(x, f.q, f.n)
    return decode(int(f.images[encode(x, f.q)]), f.q, f.n)


def update(f: Network, s: Iterable[int], x: ConfigLike) -> Configuration:
    """``f^(s)(x)``: coordinates in ``s`` take ``f_i(x)``, the rest keep ``x_i``."""
    x = as_configuration(x, f.q, f.n)
    s = node_set(s, f.n)
    fx = f.image_digits[encode(x, f.q)]
    return tuple(int(fx[i - 1]) if i in s else x[i - 1] for i in range(1, f.n + 1))


def update_word(f: Network, word: Iterable[Iterable[int]], x: ConfigLike) -> Configuration:
    """Apply ``f^(s_1)``, then ``f^(s_2)``, and so on."""
    x = as_configuration(x, f.q, f.n)
    for s in word:
        x = update(f, s, x)
    return x


def update_network(f: Network, s: Iterable[int]) -> Network:
    """The network ``f^(s)``."""
    return Network(f.q, f.n, f.update_map(s))


def schedule_network(f: Network, schedule: Schedule | Iterable[Iterable[int]]) -> Network:
    """The network ``f^Y``: block ``y_t`` reads the state left by blocks ``y_1..y_(t-1)``."""
    if not isinstance(schedule, Schedule):
        schedule = Schedule(f.n, schedule)
    elif schedule.n != f.n:
        raise NetworkError(f"schedule on {schedule.n} nodes for a network on {f.n}")
    state = np.arange(f.size, dtype=np.int64)
    out = np.array(digit_matrix(f.q, f.n))
    for block in schedule:
        if not block:
            continue
        cols = [i - 1 for i in sorted(block)]
        state = state + f.update_offsets[state][:, cols].sum(axis=1)
        out[:, cols] = digit_matrix(f.q, f.n)[state][:, cols]
    return Network.from_digits(f.q, f.n, out)


def compose(f: Network, g: Network) -> Network:
    """``f ∘ g`` (apply ``g`` first)."""
    _same_shape(f, g)
    return Network(f.q, f.n, f.images[g.images])


def power_map(images: np.ndarray, m: int) -> np.ndarray:
    """``m``-fold iterate of a self-map given by an index array (repeated squaring)."""
    if m < 0:
        raise ValueError("power must be nonnegative")
    result = np.arange(images.shape[-1], dtype=np.int64)
    base = np.asarray(images, dtype=np.int64)
    while m:
        if m & 1:
            result = base[result]
        m >>= 1
        if m:
            base = base[base]
    return result


def power(f: Network, m: int) -> Network:
    return Network(f.q, f.n, power_map(f.images, m))


def check_size(work: int, cap: int | None, what: str) -> None:
    if cap is not None and work > cap:
        raise StateSpaceTooLarge(f"{what}: estimated work {work} exceeds cap {cap}")

