"""Exhaustive and randomised checks of the structure theory.

Each ``check_*`` function runs one family of checks and returns a
:class:`CriterionResult` counting the cases examined and the violations
found. :func:`run_suite` runs them all; the ``verify`` command and the
acceptance tests both go through it. :data:`FULL` holds the sizes used for
acceptance, :data:`QUICK` a small configuration for smoke runs.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from itertools import combinations
from typing import Callable, Iterator, Optional

import numpy as np

from .boolean import (
    FREE_CHOICES,
    ArrangementNetworkSpec,
    build_arrangement_network,
    classify,
    classify_set_dimensions,
    dimension_report,
    enumerate_bijective_cs,
    enumerate_cube_partitions,
    is_arrangement_content,
    iter_cube_partitions,
    lift_q3,
    lift_q4,
    union_networks,
    validate_arrangement,
)
from .commutativity import check_commutativity, influences, support
from .core import Network, decode, delta, digit_matrix, encode, place_values
from .dynamics import check_bijective, components, orbit_analysis, pi, unreachable_fixed_points
from .io.formats import load, parse_document
from .sweep import (
    batch_bijective,
    batch_commutativity,
    batch_dynamically_local,
    batch_idempotent,
    boolean_network_blocks,
    boolean_networks,
    id_of_table,
    random_tables,
    sparse_tables,
)


@dataclass(frozen=True)
class SuiteConfig:
    exhaustive_n3: bool = True
    classify_samples: int = 10**6
    random_networks: int = 10**5
    d1_networks: int = 10**4
    self_maps: int = 10**4
    influence_tuples: int = 10**5
    lifts: int = 100
    seed: int = 20240601


FULL = SuiteConfig()
QUICK = SuiteConfig(
    exhaustive_n3=False,
    classify_samples=3000,
    random_networks=3000,
    d1_networks=1000,
    self_maps=1000,
    influence_tuples=2000,
    lifts=20,
)


@dataclass
class CriterionResult:
    key: str
    title: str
    cases: int = 0
    violations: int = 0
    notes: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.violations == 0 and self.cases > 0

    def fail(self, message: str) -> None:
        self.violations += 1
        if len(self.notes) < 20:
            self.notes.append("VIOLATION " + message)

    def note(self, message: str) -> None:
        self.notes.append(message)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.key}: {self.title} ({self.cases} cases, {self.violations} violations, {self.seconds:.1f}s)"


def _rng(cfg: SuiteConfig, salt: int) -> np.random.Generator:
    return np.random.default_rng([cfg.seed, salt])


LEVELS = ("pairwise", "disjoint-subsets", "all-subsets")


# ---------------------------------------------------------------------------
# shared corpora


@lru_cache(maxsize=None)
def commutative_ids(n: int) -> dict[str, np.ndarray]:
    """Ids of the Boolean networks on ``n`` nodes passing each commutativity level.

    Exhaustive over all ``2**(n * 2**n)`` networks (about 80 s at ``n = 3``).
    """
    found: dict[str, list[np.ndarray]] = {lvl: [] for lvl in LEVELS}
    for start, block in boolean_network_blocks(n):
        for lvl in LEVELS:
            ok = batch_commutativity(block, 2, n, lvl)
            found[lvl].append(start + np.flatnonzero(ok))
    return {lvl: np.concatenate(v) for lvl, v in found.items()}


def arrangement_contents(n: int) -> list[tuple[frozenset[int], object]]:
    """Every nonempty point set over ``n`` nodes that is an arrangement content."""
    out = []
    for bits in range(1, 1 << (1 << n)):
        C = frozenset(k for k in range(1 << n) if bits >> k & 1)
        X = is_arrangement_content(C, n)
        if X is not None:
            out.append((C, X))
    return out


def arrangement_specs(X) -> Iterator[ArrangementNetworkSpec]:
    free = sorted(dimension_report(X).free)
    for choice in np.ndindex(*([3] * len(free))):
        yield ArrangementNetworkSpec(X, {j: FREE_CHOICES[c] for j, c in zip(free, choice)})


@lru_cache(maxsize=None)
def union_corpus(n: int) -> tuple[Network, ...]:
    """All unions of arrangement networks with pairwise disjoint contents.

    Families are built around the least configuration not yet decided: it
    is either left as an unreachable fixed point or covered by a content
    avoiding everything used so far. Each union therefore appears once.
    """
    parts_by_point: dict[int, list[tuple[frozenset[int], Network]]] = {k: [] for k in range(1 << n)}
    for C, X in arrangement_contents(n):
        if len(C) < 2:
            continue
        for spec in arrangement_specs(X):
            parts_by_point[min(C)].append((C, build_arrangement_network(spec)))

    out: list[Network] = []

    def grow(point: int, used: frozenset[int], chosen: list[Network]) -> None:
        while point < (1 << n) and point in used:
            point += 1
        if point == 1 << n:
            out.append(union_networks(chosen) if chosen else Network.identity(2, n))
            return
        grow(point + 1, used, chosen)
        for C, net in parts_by_point[point]:
            if not C & used:
                grow(point + 1, used | C, chosen + [net])

    grow(0, frozenset(), [])
    return tuple(out)


def _id_tables(ids: np.ndarray) -> np.ndarray:
    ids = np.asarray(ids, dtype=np.int64)
    return (ids[:, None] >> (3 * np.arange(8))[None, :]) & 7


def _stack(nets) -> np.ndarray:
    return np.stack([f.images for f in nets])


def _product_tables(q: int, n: int) -> np.ndarray:
    """Every network whose ``f_i`` reads node ``i`` only."""
    d = digit_matrix(q, n)
    rows = []
    for maps in np.ndindex(*([q**q] * n)):
        cols = [np.array(decode(m, q, q))[d[:, i]] for i, m in enumerate(maps)]
        rows.append(np.stack(cols, axis=1) @ place_values(q, n))
    return np.array(rows, dtype=np.int64)


def commutative_corpus(include_n3: bool = True) -> list[tuple[str, int, int, np.ndarray]]:
    """Generated globally commutative networks grouped by ``(q, n)``.

    Boolean unions of arrangement networks for ``n <= 3``, their ``q = 4``
    lifts, ``q = 3`` lifts where the precondition holds, and the networks
    with independent coordinates for ``q = 3, n = 2``.
    """
    out = []
    for n in (1, 2, 3) if include_n3 else (1, 2):
        nets = union_corpus(n)
        out.append((f"unions n={n}", 2, n, _stack(nets)))
        out.append((f"q4 lifts n={n}", 4, n, _stack(lift_q4(f) for f in nets)))
        ok = [f for f in nets if all(i not in support(f, i) for i in range(1, n + 1))]
        if ok:
            out.append((f"q3 lifts n={n}", 3, n, _stack(lift_q3(f) for f in ok)))
    out.append(("independent q=3 n=2", 3, 2, _product_tables(3, 2)))
    return out


RANDOM_SHAPES = ((2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4))


def _random_mix(q: int, n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    half = count // 2
    return np.concatenate([random_tables(q, n, half, rng), sparse_tables(q, n, count - half, rng)])


# ---------------------------------------------------------------------------
# criteria


def check_finite_collapse(cfg: SuiteConfig) -> CriterionResult:
    r = CriterionResult("finite-collapse", "pairwise, disjoint-subsets and all-subsets commutativity agree")
    tables = boolean_networks(2, 0, 256)
    verdicts = {lvl: batch_commutativity(tables, 2, 2, lvl) for lvl in LEVELS}
    for k in range(256):
        f = Network(2, 2, tables[k])
        scalar = [bool(check_commutativity(f, lvl)) for lvl in LEVELS]
        if len(set(scalar)) != 1:
            r.fail(f"n=2 network id {k}: levels disagree {dict(zip(LEVELS, scalar))}")
        if scalar != [bool(verdicts[lvl][k]) for lvl in LEVELS]:
            r.fail(f"n=2 network id {k}: batch and scalar checkers disagree")
    r.cases += 256
    r.note(f"n=2: {int(verdicts['all-subsets'].sum())} of 256 commutative")

    if cfg.exhaustive_n3:
        ids = commutative_ids(3)
        base = ids["all-subsets"]
        for lvl in LEVELS:
            diff = np.setxor1d(ids[lvl], base)
            for k in diff[:5]:
                r.fail(f"n=3 network id {int(k)}: {lvl} disagrees with all-subsets")
            r.violations += max(0, diff.size - 5)
        r.cases += 1 << 24
        r.note(f"n=3: {base.size} of 2^24 commutative (exhaustive)")
    else:
        rng = _rng(cfg, 1)
        sample = rng.integers(0, 1 << 24, size=cfg.classify_samples)
        tables = np.concatenate([_id_tables(sample), _stack(union_corpus(3))])
        v = [batch_commutativity(tables, 2, 3, lvl) for lvl in LEVELS]
        bad = np.flatnonzero((v[0] != v[1]) | (v[1] != v[2]))
        for k in bad:
            r.fail(f"n=3 table {tables[k].tolist()}: levels disagree")
        r.cases += tables.shape[0]
        r.note(f"n=3: {tables.shape[0]} sampled and generated networks")
    return r


def _classification_agrees(r: CriterionResult, f: Network, expected: bool) -> bool:
    rep = classify(f)
    if bool(rep) != expected:
        r.fail(f"classify={bool(rep)} but all-subsets={expected} on {f!r}")
        return False
    if expected:
        nets = [build_arrangement_network(v.spec) for v in rep.components]
        rebuilt = union_networks(nets) if nets else Network.identity(2, f.n)
        if rebuilt != f:
            r.fail(f"reconstruction from the classification differs from {f!r}")
            return False
    return True


def check_classification(cfg: SuiteConfig) -> CriterionResult:
    r = CriterionResult("classification", "classify accepts exactly the globally commutative networks")
    tables = boolean_networks(2, 0, 256)
    truth = batch_commutativity(tables, 2, 2, "all-subsets")
    for k in range(256):
        _classification_agrees(r, Network(2, 2, tables[k]), bool(truth[k]))
    r.cases += 256

    if cfg.exhaustive_n3:
        ids = commutative_ids(3)["all-subsets"]
        positives = [Network(2, 3, row) for row in _id_tables(ids)]
        r.note(f"n=3: all {len(positives)} commutative networks from the exhaustive sweep")
    else:
        positives = list(union_corpus(3))
        r.note(f"n=3: {len(positives)} generated unions as positives")
    for f in positives:
        _classification_agrees(r, f, True)
    r.cases += len(positives)

    rng = _rng(cfg, 2)
    remaining = cfg.classify_samples
    hits = 0
    while remaining:
        m = min(remaining, 1 << 16)
        block = _id_tables(rng.integers(0, 1 << 24, size=m))
        truth = batch_commutativity(block, 2, 3, "all-subsets")
        hits += int(truth.sum())
        for row, t in zip(block, truth):
            got = bool(classify(Network(2, 3, row), stop_early=True))
            if got != bool(t):
                r.fail(f"n=3 uniform sample {row.tolist()}: classify={got}, all-subsets={bool(t)}")
        remaining -= m
    r.cases += cfg.classify_samples
    r.note(f"n=3: {cfg.classify_samples} uniform samples, {hits} commutative")
    return r


def check_synthesis(cfg: SuiteConfig) -> CriterionResult:
    r = CriterionResult("synthesis", "arrangement networks and their unions are globally commutative")
    for n in (1, 2, 3):
        contents = arrangement_contents(n)
        nets = [build_arrangement_network(s) for _, X in contents for s in arrangement_specs(X)]
        ok = batch_commutativity(_stack(nets), 2, n, "all-subsets")
        for f in np.array(nets, dtype=object)[~ok]:
            r.fail(f"arrangement network {f!r} is not globally commutative")
        for (C, X) in contents:
            f = build_arrangement_network(next(arrangement_specs(X)))
            big = [c for c in components(f).components if len(c) > 1]
            if len(C) > 1 and big != [tuple(sorted(C))]:
                r.fail(f"components of the arrangement network on {sorted(C)} are {big}")
        r.cases += len(nets)
        unions = union_corpus(n)
        ok = batch_commutativity(_stack(unions), 2, n, "all-subsets")
        for f in np.array(unions, dtype=object)[~ok]:
            r.fail(f"union {f!r} is not globally commutative")
        r.cases += len(unions)
        r.note(f"n={n}: {len(contents)} contents, {len(nets)} arrangement networks, {len(unions)} unions")
        if n < 3 or cfg.exhaustive_n3:
            swept = set(commutative_ids(n)["all-subsets"].tolist())
            made = {id_of_table(n, f.images) for f in unions}
            if made != swept:
                r.fail(f"n={n}: unions ({len(made)}) and swept commutative networks ({len(swept)}) differ")
            else:
                r.note(f"n={n}: the unions are exactly the {len(swept)} swept commutative networks")
    return r


def set_partitions(items: list) -> Iterator[list[list]]:
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[head]] + part
        for k in range(len(part)):
            yield part[:k] + [[head] + part[k]] + part[k + 1:]


def _is_subcube(points: list[int], n: int) -> bool:
    # a subcube has exactly 2**(free coordinates) points
    varying = 0
    for p in points:
        varying |= p ^ points[0]
    return len(points) == 1 << bin(varying).count("1")


def cube_partition_oracle(n: int) -> set[frozenset[frozenset[int]]]:
    """All set partitions of the cube whose parts are subcubes, by brute force."""
    return {
        frozenset(frozenset(p) for p in part)
        for part in set_partitions(list(range(1 << n)))
        if all(_is_subcube(p, n) for p in part)
    }


def check_counting(cfg: SuiteConfig) -> CriterionResult:
    r = CriterionResult("counting", "subcube partitions match the set-partition oracle")
    for n in (1, 2, 3):
        oracle = cube_partition_oracle(n)
        count = enumerate_cube_partitions(n)
        listed = {frozenset(frozenset(c.points()) for c in part) for part in iter_cube_partitions(n)}
        if count != len(oracle):
            r.fail(f"n={n}: counted {count}, oracle {len(oracle)}")
        if listed != oracle:
            r.fail(f"n={n}: listed partitions differ from the oracle")
        nets = enumerate_bijective_cs(n)
        if len(nets) != len(oracle) or len(set(nets)) != len(nets):
            r.fail(f"n={n}: {len(nets)} networks ({len(set(nets))} distinct) for {len(oracle)} partitions")
        tables = _stack(nets)
        bad = ~(batch_commutativity(tables, 2, n, "all-subsets") & batch_bijective(tables, 2, n))
        for k in np.flatnonzero(bad):
            r.fail(f"n={n}: {nets[k]!r} is not a commutative bijection")
        for f in nets[:50]:
            if not check_bijective(f):
                r.fail(f"n={n}: scalar bijectivity check rejects {f!r}")
        r.cases += len(oracle) + len(nets)
        r.note(f"n={n}: {count} partitions")
    return r


def check_dynamical_locality(cfg: SuiteConfig) -> CriterionResult:
    r = CriterionResult("dynamical-locality", "commutative networks are dynamically local under every update")
    for name, q, n, tables in commutative_corpus():
        cs = batch_commutativity(tables, q, n, "all-subsets")
        c1 = batch_commutativity(tables, q, n, "pairwise")
        ds = batch_dynamically_local(tables, q, n, "all-subsets")
        for k in np.flatnonzero(~cs):
            r.fail(f"{name}: generated network {tables[k].tolist()} is not commutative")
        for k in np.flatnonzero((cs | c1) & ~ds):
            r.fail(f"{name}: commutative network {tables[k].tolist()} is not dynamically local")
        r.cases += tables.shape[0]
        r.note(f"{name}: {tables.shape[0]} networks")
    rng = _rng(cfg, 5)
    per = math.ceil(cfg.random_networks / len(RANDOM_SHAPES))
    hits = 0
    for q, n in RANDOM_SHAPES:
        tables = _random_mix(q, n, per, rng)
        cs = batch_commutativity(tables, q, n, "all-subsets")
        c1 = batch_commutativity(tables, q, n, "pairwise")
        ds = batch_dynamically_local(tables, q, n, "all-subsets")
        hits += int(c1.sum())
        for k in np.flatnonzero((cs & ~ds) | (c1 & ~ds)):
            r.fail(f"random q={q} n={n}: {tables[k].tolist()} commutative but not dynamically local")
        r.cases += per
    r.note(f"random: {per * len(RANDOM_SHAPES)} networks, {hits} locally commutative")
    return r


def _idempotence_profile(tables: np.ndarray, q: int, n: int) -> dict[str, np.ndarray]:
    return {
        "I": batch_idempotent(tables, q, n, "global"),
        "I1": batch_idempotent(tables, q, n, "singletons"),
        "I3": batch_idempotent(tables, q, n, "all-subsets"),
        "IC1": batch_commutativity(tables, q, n, "pairwise", strengthened=True),
        "IC3": batch_commutativity(tables, q, n, "all-subsets", strengthened=True),
    }


def check_idempotence(cfg: SuiteConfig) -> CriterionResult:
    r = CriterionResult("idempotence", "idempotence and strengthened commutativity coincide")
    for name, q, n, tables in commutative_corpus():
        p = _idempotence_profile(tables, q, n)
        keys = ("I", "I1", "I3", "IC3")
        bad = np.zeros(tables.shape[0], dtype=bool)
        for a in keys[1:]:
            bad |= p[a] != p["I"]
        for k in np.flatnonzero(bad):
            r.fail(f"{name}: {tables[k].tolist()} has {({a: bool(p[a][k]) for a in keys})}")
        r.cases += tables.shape[0]
        r.note(f"{name}: {int(p['I'].sum())} of {tables.shape[0]} idempotent")

    rng = _rng(cfg, 6)
    found = idem = 0
    per = math.ceil(cfg.random_networks / len(RANDOM_SHAPES))
    for q, n in RANDOM_SHAPES:
        got = 0
        while got < per:
            tables = sparse_tables(q, n, 4096, rng)
            tables = tables[batch_commutativity(tables, q, n, "pairwise")][: per - got]
            p = _idempotence_profile(tables, q, n)
            keys = ("I1", "IC1", "I3", "IC3")
            bad = np.zeros(tables.shape[0], dtype=bool)
            for a in keys[1:]:
                bad |= p[a] != p["I1"]
            for k in np.flatnonzero(bad):
                r.fail(f"q={q} n={n}: {tables[k].tolist()} has {({a: bool(p[a][k]) for a in keys})}")
            got += tables.shape[0]
            idem += int(p["I1"].sum())
        found += got
    r.cases += found
    r.note(f"random locally commutative: {found} networks, {idem} with idempotent single updates")
    return r


def transient_witness(q: int) -> np.ndarray:
    """``0 -> 1 -> ... -> q-1``, fixed at the end: transient length ``q - 1``."""
    return np.minimum(np.arange(q) + 1, q - 1)


def cycle_witness(q: int, k: int) -> np.ndarray:
    """A ``k``-cycle on ``0..k-1``, every other symbol fixed."""
    a = np.arange(q)
    a[:k] = (a[:k] + 1) % k
    return a


def check_alphabet_powers(cfg: SuiteConfig) -> CriterionResult:
    r = CriterionResult("alphabet-powers", "single-node updates and self-maps are dynamically local")
    rng = _rng(cfg, 7)
    shapes = [(q, n) for q in (2, 3, 4) for n in range(1, 7) if q**n <= 4096]
    per = math.ceil(cfg.d1_networks / len(shapes))
    for q, n in shapes:
        tables = _random_mix(q, n, per, rng) if n > 1 else random_tables(q, n, per, rng)
        ok = batch_dynamically_local(tables, q, n, "singletons")
        for k in np.flatnonzero(~ok):
            r.fail(f"q={q} n={n}: a single-node update of {tables[k].tolist()} is not dynamically local")
        r.cases += per

    per = math.ceil(cfg.self_maps / 5)
    for q in range(2, 7):
        maps = random_tables(q, 1, per, rng)
        ok = batch_dynamically_local(maps, q, 1, "global")
        for k in np.flatnonzero(~ok):
            r.fail(f"q={q}: self-map {maps[k].tolist()} violates the power identity")
        r.cases += per

        witnesses = [transient_witness(q)] + [cycle_witness(q, k) for k in range(1, q + 1)]
        reports = [orbit_analysis(Network(q, 1, w)) for w in witnesses]
        if reports[0].transient != q - 1:
            r.fail(f"q={q}: transient witness has transient {reports[0].transient}")
        periods = [rep.period for rep in reports[1:]]
        if periods != list(range(1, q + 1)) or math.lcm(*periods) != pi(q):
            r.fail(f"q={q}: cycle witnesses have periods {periods}")
        # the exponent pair cannot be lowered: on the witnesses, a^m = a^l (l < m)
        # holds exactly when l >= q - 1 and pi(q) divides m - l
        top = pi(q) + q - 1
        W = np.stack(witnesses)
        powers = [np.broadcast_to(np.arange(q), W.shape).copy()]
        for _ in range(top):
            powers.append(np.take_along_axis(W, powers[-1], axis=1))
        for m in range(1, top + 1):
            for low in range(m):
                holds = bool((powers[m] == powers[low]).all())
                if holds != (low >= q - 1 and (m - low) % pi(q) == 0):
                    r.fail(f"q={q}: witnesses give a^{m} = a^{low} -> {holds}")
        r.note(f"q={q}: pi={pi(q)}, witnesses realise transient {q - 1} and periods 1..{q}")
    return r


def _mix(x: tuple, y: tuple, u) -> tuple:
    return tuple(y[j] if (j + 1) in u else x[j] for j in range(len(x)))


def _is_influence(phi: Callable[[tuple], int], x: tuple, y: tuple, t: frozenset) -> bool:
    target = phi(y)
    if phi(_mix(x, y, t)) != target:
        return False
    items = sorted(t)
    return all(
        phi(_mix(x, y, frozenset(sub))) != target
        for k in range(len(items))
        for sub in combinations(items, k)
    )


def check_influences(cfg: SuiteConfig) -> CriterionResult:
    r = CriterionResult("influences", "minimal influences behave as stated on random tuples")
    rng = _rng(cfg, 8)
    shapes = [(q, n) for q in (2, 3) for n in range(1, 7) if q**n <= 729]
    per_net = 10
    done = 0
    while done < cfg.influence_tuples:
        q, n = shapes[int(rng.integers(len(shapes)))]
        table = (random_tables if rng.random() < 0.5 else sparse_tables)(q, n, 1, rng)[0]
        f = Network(q, n, table)
        digits = f.image_digits
        for _ in range(per_net):
            i = int(rng.integers(1, n + 1))
            x = tuple(int(v) for v in rng.integers(0, q, size=n))
            y = tuple(int(v) for v in rng.integers(0, q, size=n))
            cache: dict[tuple, int] = {}

            def phi(z, _i=i):
                if z not in cache:
                    cache[z] = int(digits[encode(z, q), _i - 1])
                return cache[z]

            found = influences(f, i, x, y)
            d = delta(x, y)
            where = f"q={q} n={n} i={i} x={x} y={y} table={table.tolist()}"
            if not found:
                r.fail(f"no influence for {where}")
            if any(not u <= d for u in found):
                r.fail(f"influence outside the disagreement set for {where}")
            if (found == (frozenset(),)) != (phi(x) == phi(y)):
                r.fail(f"empty influence mismatch for {where}")
            for u in found:
                for k in range(len(u) + 1):
                    for t in map(frozenset, combinations(sorted(u), k)):
                        z = _mix(x, y, u - t)
                        if not _is_influence(phi, z, y, t):
                            r.fail(f"{sorted(t)} is not an influence from {z} although {sorted(u)} is, {where}")
            done += 1
            if done == cfg.influence_tuples:
                break
    r.cases = done
    return r


def check_lifts(cfg: SuiteConfig) -> CriterionResult:
    r = CriterionResult("lifts", "q=4 and q=3 lifts are globally commutative")
    rng = _rng(cfg, 9)
    for k in range(cfg.lifts):
        n = int(rng.integers(1, 4))
        f = Network(2, n, random_tables(2, n, 1, rng)[0])
        v = check_commutativity(lift_q4(f), "all-subsets")
        if not v:
            r.fail(f"q4 lift of {f!r} fails at {v.witness}")
    r.cases += cfg.lifts
    made = 0
    while made < cfg.lifts:
        n = int(rng.integers(1, 4))
        d = digit_matrix(2, n)
        out = np.empty((1 << n, n), dtype=np.int64)
        for i in range(n):
            # a random function of the other nodes only
            others = [j for j in range(n) if j != i]
            key = d[:, others] @ (2 ** np.arange(len(others))) if others else np.zeros(1 << n, dtype=np.int64)
            out[:, i] = rng.integers(0, 2, size=1 << max(0, n - 1))[key]
        f = Network.from_digits(2, n, out)
        v = check_commutativity(lift_q3(f), "all-subsets")
        if not v:
            r.fail(f"q3 lift of {f!r} fails at {v.witness}")
        made += 1
    r.cases += made
    return r


EXPECTED_DIMENSIONS = {
    "arrangement_x1.json": {"tight": {1, 2}, "external": {3}, "free": set()},
    "arrangement_x2.json": {"tight": {1, 2, 3}, "external": set(), "free": set()},
    "arrangement_x3.json": {"tight": {1, 3}, "external": set(), "free": {2}},
    "arrangement_x4.json": {"tight": {1, 2, 3}, "external": set(), "free": set()},
}


def fixture_path(name: str):
    return resources.files("autonet") / "data" / name


def check_fixtures(cfg: SuiteConfig) -> CriterionResult:
    r = CriterionResult("fixtures", "checked-in example arrangements and network reproduce exactly")
    for name, want in EXPECTED_DIMENSIONS.items():
        doc = parse_document(json.loads(fixture_path(name).read_text(encoding="utf-8")))
        X = validate_arrangement(doc.body["cubes"])
        rep = dimension_report(X)
        got = {"tight": set(rep.tight), "external": set(rep.external), "free": set(rep.free)}
        by_set = classify_set_dimensions(X.content(), X.n)
        from_set = {kind: set(by_set.of(kind)) for kind in want}
        if got != want or from_set != want:
            r.fail(f"{name}: dimensions {got} (from the content: {from_set}), expected {want}")
        r.cases += 1

    f = load(fixture_path("x3_negate.json"))
    dec = components(f)
    want_components = ((0, 2, 4, 5, 6, 7), (1,), (3,))
    if dec.components != want_components:
        r.fail(f"x3_negate: components {dec.components}, expected {want_components}")
    if set(dec.unreachable_fixed) != {1, 3} or unreachable_fixed_points(f) != {1, 3}:
        r.fail(f"x3_negate: unreachable fixed points {dec.unreachable_fixed}, expected 001 and 011")
    rep = classify(f)
    choices = [dict(v.spec.free_choice) for v in rep.components if v.ok]
    if not rep or choices != [{2: "negate"}]:
        r.fail(f"x3_negate: classification {bool(rep)} with free choices {choices}")
    elif rep.components[0].spec.arrangement.content() != frozenset(want_components[0]):
        r.fail("x3_negate: reconstructed arrangement has the wrong content")
    if load(fixture_path("arrangement_x3.json")) != f:
        r.fail("x3_negate: the network differs from the negate arrangement network on the third arrangement")
    r.cases += 5
    return r


CRITERIA: tuple[Callable[[SuiteConfig], CriterionResult], ...] = (
    check_finite_collapse,
    check_classification,
    check_synthesis,
    check_counting,
    check_dynamical_locality,
    check_idempotence,
    check_alphabet_powers,
    check_influences,
    check_lifts,
    check_fixtures,
)


def run_criterion(check: Callable[[SuiteConfig], CriterionResult], cfg: SuiteConfig) -> CriterionResult:
    t0 = time.perf_counter()
    res = check(cfg)
    res.seconds = time.perf_counter() - t0
    return res


def run_suite(cfg: SuiteConfig = FULL, only: Optional[set[str]] = None,
              progress: Optional[Callable[[CriterionResult], None]] = None) -> list[CriterionResult]:
    results = []
    for check in CRITERIA:
        key = check.__name__.removeprefix("check_").replace("_", "-")
        if only and key not in only:
            continue
        res = run_criterion(check, cfg)
        results.append(res)
        if progress:
            progress(res)
    return results


def criterion_keys() -> list[str]:
    return [c.__name__.removeprefix("check_").replace("_", "-") for c in CRITERIA]


__all__ = [
    "FULL",
    "QUICK",
    "CRITERIA",
    "CriterionResult",
    "SuiteConfig",
    "commutative_corpus",
    "commutative_ids",
    "criterion_keys",
    "cube_partition_oracle",
    "run_criterion",
    "run_suite",
    "set_partitions",
    "union_corpus",
]
