"""Recognising globally commutative Boolean networks as unions of arrangement networks.

Each non-singleton weak component ``C`` of the transition graph must pass,
in order:

1. ``C`` is the content of an arrangement;
2. every local function is uniform on ``C`` (its value on ``C`` depends only
   on the node's own state), and nontrivial for each internal dimension;
3. for each tight dimension ``i`` and each ``i``-border ``z``, ``f_i`` is
   constantly ``1 - z_i`` on ``C``.

External dimensions need no separate test: a component cannot leave the
hyperplane it lives in, so ``f`` is trivial there by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Optional

import numpy as np

from ..core import Network, NetworkError, digit_matrix
from ..dynamics import components
from .arrangement import classify_set_dimensions, is_arrangement_content
from .networks import ArrangementNetworkSpec

FailureReason = Literal[
    "not-arrangement-content", "not-uniform", "trivial-internal-dimension", "tight-constant-violation"
]

_CHOICE = {(0, 0): "const0", (1, 1): "const1", (1, 0): "negate"}


class UnsupportedAlphabet(NetworkError):
    pass


@dataclass(frozen=True)
class ComponentVerdict:
    members: tuple[int, ...]
    spec: Optional[ArrangementNetworkSpec] = None
    failure: Optional[FailureReason] = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.failure is None


@dataclass(frozen=True)
class ClassificationReport:
    is_globally_commutative: bool
    components: tuple[ComponentVerdict, ...] = field(default_factory=tuple)
    unreachable_fixed: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.is_globally_commutative


def _check_component(f: Network, C: tuple[int, ...]) -> ComponentVerdict:
    n = f.n
    X = is_arrangement_content(C, n)
    if X is None:
        return ComponentVerdict(C, failure="not-arrangement-content", detail="no star centre inside the component")
    idx = np.array(C, dtype=np.int64)
    own = digit_matrix(2, n)[idx]
    img = f.image_digits[idx]
    dims = classify_set_dimensions(C, n)

    for i in range(1, n + 1):
        col, xi = img[:, i - 1], own[:, i - 1]
        for v in (0, 1):
            vals = col[xi == v]
            if vals.size and (vals != vals[0]).any():
                return ComponentVerdict(C, failure="not-uniform", detail=f"f_{i} varies with x_{i}={v} held fixed")
    for i in range(1, n + 1):
        if dims.classes[i] != "external" and np.array_equal(img[:, i - 1], own[:, i - 1]):
            return ComponentVerdict(C, failure="trivial-internal-dimension", detail=f"f_{i} is trivial on the component")
    for i, borders in dims.borders.items():
        for z in borders:
            want = 1 - ((z >> (n - i)) & 1)
            if (img[:, i - 1] != want).any():
                return ComponentVerdict(
                    C, failure="tight-constant-violation", detail=f"f_{i} is not constantly {want} (border {z:0{n}b})"
                )

    choice = {}
    for j in sorted(dims.of("free")):
        col, xj = img[:, j - 1], own[:, j - 1]
        choice[j] = _CHOICE[(int(col[xj == 0][0]), int(col[xj == 1][0]))]
    return ComponentVerdict(C, spec=ArrangementNetworkSpec(X, choice))


def classify(f: Network, stop_early: bool = False) -> ClassificationReport:
    """Decide whether ``f`` is a union of arrangement networks, with reasons.

    With ``stop_early`` the scan ends at the first failing component.
    """
    if f.q != 2:
        raise UnsupportedAlphabet(f"classification is defined for Boolean networks only (q={f.q})")
    dec = components(f)
    verdicts = []
    for C in dec.nontrivial():
        v = _check_component(f, C)
        verdicts.append(v)
        if stop_early and not v.ok:
            break
    ok = all(v.ok for v in verdicts)
    return ClassificationReport(ok, tuple(verdicts), dec.unreachable_fixed)
