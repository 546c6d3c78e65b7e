"""Arrangement networks and unions of networks with disjoint reachable regions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Mapping, Sequence

import numpy as np

from ..core import Network, NetworkError, digit_matrix
from ..dynamics import components
from .arrangement import Arrangement, dimension_report, validate_arrangement
from .subcube import Subcube

FreeChoice = Literal["const0", "const1", "negate"]
FREE_CHOICES = ("const0", "const1", "negate")


class UnionError(NetworkError):
    """Parts of a union share a reachable configuration (``witness``, an index)."""

    def __init__(self, message: str, witness: int, parts: tuple[int, int]):
        super().__init__(message)
        self.witness = witness
        self.parts = parts


@dataclass(frozen=True)
class ArrangementNetworkSpec:
    arrangement: Arrangement
    free_choice: Mapping[int, FreeChoice] = field(default_factory=dict)

    def __post_init__(self):
        free = dimension_report(self.arrangement).free
        keys = set(self.free_choice)
        if keys != free:
            raise NetworkError(
                f"free_choice must cover exactly the free dimensions {sorted(free)}, got {sorted(keys)}"
            )
        bad = {k: v for k, v in self.free_choice.items() if v not in FREE_CHOICES}
        if bad:
            raise NetworkError(f"unknown free-dimension maps {bad}; expected one of {FREE_CHOICES}")

    @classmethod
    def from_patterns(cls, patterns: Sequence[str], free_choice: Mapping[int, FreeChoice] | None = None):
        return cls(validate_arrangement(patterns), dict(free_choice or {}))


def build_arrangement_network(spec: ArrangementNetworkSpec) -> Network:
    """Identity off the content; on it, tight nodes snap to the intersection
    values, free nodes apply their chosen map and external nodes stay put."""
    X = spec.arrangement
    n = X.n
    report = dimension_report(X)
    alpha = report.intersection.values
    digits = np.array(digit_matrix(2, n))
    inside = np.zeros(1 << n, dtype=bool)
    inside[sorted(X.content())] = True
    out = digits.copy()
    for i in report.tight:
        out[inside, i - 1] = alpha[i]
    for j, choice in spec.free_choice.items():
        if choice == "const0":
            out[inside, j - 1] = 0
        elif choice == "const1":
            out[inside, j - 1] = 1
        else:
            out[inside, j - 1] = 1 - digits[inside, j - 1]
    return Network.from_digits(2, n, out)


def reachable_region(f: Network) -> frozenset[int]:
    """``R(f)``: configurations outside singleton components."""
    return frozenset(components(f).reachable())


def union_networks(parts: Sequence[Network]) -> Network:
    """Union of networks whose reachable regions are pairwise disjoint."""
    if not parts:
        raise NetworkError("union of an empty family")
    q, n = parts[0].q, parts[0].n
    if any((p.q, p.n) != (q, n) for p in parts):
        raise NetworkError("all parts of a union must share q and n")
    regions = [reachable_region(p) for p in parts]
    for a in range(len(parts)):
        for b in range(a + 1, len(parts)):
            common = regions[a] & regions[b]
            if common:
                w = min(common)
                raise UnionError(f"parts {a} and {b} both reach configuration index {w}", w, (a, b))
    images = np.arange(q**n, dtype=np.int64)
    for p, region in zip(parts, regions):
        idx = np.fromiter(region, dtype=np.int64, count=len(region))
        images[idx] = p.images[idx]
    return Network(q, n, images)


def random_arrangement(n: int, rng: np.random.Generator, center: int | None = None, avoid: frozenset[int] = frozenset(),
                       max_cubes: int = 4, tries: int = 20) -> Arrangement | None:
    """A random arrangement through ``center`` whose content misses ``avoid``."""
    full = (1 << n) - 1
    if center is None:
        center = int(rng.integers(1 << n))
    for _ in range(tries):
        k = int(rng.integers(1, max_cubes + 1))
        cubes = []
        for _ in range(k):
            care = int(rng.integers(1 << n)) & full
            cubes.append(Subcube(n, care, center & care))
        cubes = list(dict.fromkeys(cubes))
        try:
            X = validate_arrangement(cubes)
        except NetworkError:
            continue
        if not X.content() & avoid:
            return X
    return None


def random_spec(X: Arrangement, rng: np.random.Generator) -> ArrangementNetworkSpec:
    free = dimension_report(X).free
    return ArrangementNetworkSpec(X, {j: FREE_CHOICES[int(rng.integers(3))] for j in sorted(free)})


def random_globally_commutative(n: int, rng: np.random.Generator, parts: int | None = None) -> Network:
    """A random union of arrangement networks with disjoint contents."""
    if parts is None:
        parts = int(rng.integers(1, 4))
    used: frozenset[int] = frozenset()
    nets = []
    for _ in range(parts):
        free_points = sorted(set(range(1 << n)) - used)
        if not free_points:
            break
        center = free_points[int(rng.integers(len(free_points)))]
        X = random_arrangement(n, rng, center=center, avoid=used)
        if X is None:
            continue
        used = used | X.content()
        nets.append(build_arrangement_network(random_spec(X, rng)))
    if not nets:
        return Network.identity(2, n)
    return union_networks(nets)
