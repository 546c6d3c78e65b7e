"""Command-line interface.

Exit codes: 0 when the property holds or the command succeeded, 1 when the
property fails (a witness is printed), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from ..boolean import (
    ArrangementNetworkSpec,
    build_arrangement_network,
    classify,
    classify_set_dimensions,
    enumerate_cube_partitions,
    lift_q3,
    lift_q4,
    random_globally_commutative,
    union_networks,
)
from ..commutativity import check_commutativity, influences
from ..core import Network, NetworkError, StateSpaceTooLarge, as_configuration, config_str, decode, format_node_set
from ..dynamics import (
    SCOPES,
    check_bijective,
    check_dynamically_local,
    check_idempotent,
    components,
    orbit_analysis,
    pi,
)
from .dot import to_dot
from .formats import FormatError, dumps, load

OK, FAILS, USAGE = 0, 1, 2

PROPERTIES = ("c1", "c2", "cs", "ic", "dynlocal", "bijective", "idempotent")
_COMMUTATIVITY_LEVEL = {"c1": "pairwise", "c2": "disjoint-subsets", "cs": "all-subsets"}
_IC_LEVEL = {"singletons": "pairwise", "disjoint-subsets": "disjoint-subsets", "all-subsets": "all-subsets"}
_SCOPED = {"dynlocal": check_dynamically_local, "bijective": check_bijective, "idempotent": check_idempotent}


class UsageError(Exception):
    pass


def _cfg(x, q: int = 2, n: int = 0) -> str:
    if isinstance(x, (int, np.integer)):
        return config_str(decode(int(x), q, n))
    return config_str(x)


def _emit(args, report: dict[str, Any], lines: Sequence[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(report, sort_keys=True))
    else:
        for line in lines:
            print(line)


# ---------------------------------------------------------------------------
# commands


def cmd_check(args) -> int:
    f = load(args.file)
    prop = args.property
    if prop in _COMMUTATIVITY_LEVEL or prop == "ic":
        if prop == "ic":
            scope = args.scope or "all-subsets"
            if scope not in _IC_LEVEL:
                raise UsageError(f"ic takes --scope from {sorted(_IC_LEVEL)}")
            level = _IC_LEVEL[scope]
        elif args.scope is not None:
            raise UsageError(f"--scope does not apply to {prop}")
        else:
            level = _COMMUTATIVITY_LEVEL[prop]
        v = check_commutativity(f, level, strengthened=prop == "ic", max_work=args.max_work)
        witness = None
        if not v:
            s, t, x = v.witness
            witness = {"s": sorted(s), "t": sorted(t), "x": config_str(x)}
            text = f"({format_node_set(s)},{format_node_set(t)},{config_str(x)})"
    else:
        scope = args.scope or "global"
        if scope not in SCOPES:
            raise UsageError(f"{prop} takes --scope from {list(SCOPES)}")
        level = scope
        v = _SCOPED[prop](f, scope, max_work=args.max_work)
        witness = None
        if not v:
            s, where = v.witness
            if prop == "bijective":
                a, b = where
                witness = {"s": sorted(s), "x": config_str(a), "y": config_str(b)}
                text = f"({format_node_set(s)},({config_str(a)},{config_str(b)}))"
            else:
                witness = {"s": sorted(s), "x": config_str(where)}
                text = f"({format_node_set(s)},{config_str(where)})"
    report = {"command": "check", "property": prop, "level": level, "holds": v.holds, "witness": witness}
    lines = [f"{prop} ({level}): {'holds' if v else 'fails'}"]
    if not v:
        lines.append(f"witness: {text}")
    _emit(args, report, lines)
    return OK if v else FAILS


def cmd_dynamics(args) -> int:
    f = load(args.file)
    orb = orbit_analysis(f)
    dec = components(f)
    local = check_dynamically_local(f)
    report = {
        "command": "dynamics",
        "transient": orb.transient,
        "period": orb.period,
        "pi_q": pi(f.q),
        "dynamically_local": local.holds,
        "fixed_points": [_cfg(k, f.q, f.n) for k in dec.fixed_points],
        "gardens_of_eden": len(dec.gardens_of_eden),
    }
    lines = [
        f"transient length: {orb.transient}",
        f"period: {orb.period} (pi_q = {pi(f.q)})",
        f"dynamically local: {'yes' if local else 'no'}",
        f"fixed points ({len(dec.fixed_points)}): " + (" ".join(report["fixed_points"]) or "none"),
        f"gardens of Eden: {len(dec.gardens_of_eden)}",
    ]
    _emit(args, report, lines)
    return OK


def cmd_components(args) -> int:
    f = load(args.file)
    dec = components(f)
    comps = [[_cfg(k, f.q, f.n) for k in c] for c in dec.components]
    unreachable = [_cfg(k, f.q, f.n) for k in dec.unreachable_fixed]
    if args.dot:
        Path(args.dot).write_text(to_dot(f, full_arcs=args.full_arcs), encoding="utf-8")
    if args.plot:
        from .plotting import save_transition_graph

        save_transition_graph(f, args.plot)
    report = {"command": "components", "components": comps, "unreachable_fixed": unreachable}
    lines = [f"{len(comps)} components"]
    lines += [f"  [{len(c)}] " + " ".join(c) for c in comps]
    lines.append("unreachable fixed points: " + (" ".join(unreachable) or "none"))
    _emit(args, report, lines)
    return OK


def cmd_classify(args) -> int:
    f = load(args.file)
    rep = classify(f)
    n = f.n
    items = []
    lines = [f"globally commutative: {'yes' if rep else 'no'}"]
    for v in rep.components:
        members = [_cfg(k, 2, n) for k in v.members]
        item: dict[str, Any] = {"members": members, "ok": v.ok}
        if v.ok:
            cubes = v.spec.arrangement.patterns()
            dims = classify_set_dimensions(v.members, n)
            item.update(cubes=cubes, free_choice={str(k): c for k, c in sorted(v.spec.free_choice.items())},
                        tight=sorted(dims.of("tight")), free=sorted(dims.of("free")),
                        external=sorted(dims.of("external")))
            choice = ", ".join(f"f_{k}={c}" for k, c in sorted(v.spec.free_choice.items())) or "none"
            lines.append(f"  component {' '.join(members)}: arrangement {' + '.join(cubes)}; "
                         f"tight {format_node_set(item['tight'])} free {format_node_set(item['free'])} "
                         f"external {format_node_set(item['external'])}; free choices: {choice}")
        else:
            item.update(failure=v.failure, detail=v.detail)
            lines.append(f"  component {' '.join(members)}: {v.failure} ({v.detail})")
        items.append(item)
    unreachable = [_cfg(k, 2, n) for k in rep.unreachable_fixed]
    lines.append("unreachable fixed points: " + (" ".join(unreachable) or "none"))
    if args.plot:
        from .plotting import save_transition_graph

        save_transition_graph(f, args.plot)
    report = {"command": "classify", "globally_commutative": rep.is_globally_commutative,
              "components": items, "unreachable_fixed": unreachable}
    _emit(args, report, lines)
    return OK if rep else FAILS


def cmd_influences(args) -> int:
    f = load(args.file)
    x = as_configuration(args.x, f.q, f.n)
    y = as_configuration(args.y, f.q, f.n)
    found = influences(f, args.i, x, y)
    report = {"command": "influences", "i": args.i, "x": config_str(x), "y": config_str(y),
              "influences": [sorted(u) for u in found]}
    lines = [f"minimal influences on f_{args.i} from {config_str(x)} towards {config_str(y)}:"]
    lines += ["  " + format_node_set(u) for u in found]
    _emit(args, report, lines)
    return OK


def cmd_count_partitions(args) -> int:
    if args.list:
        count, parts = enumerate_cube_partitions(args.n, listing=True)
    else:
        count, parts = enumerate_cube_partitions(args.n, workers=args.workers), []
    report = {"command": "count-partitions", "n": args.n, "count": count}
    if args.list:
        report["partitions"] = [[c.pattern for c in p] for p in parts]
    lines = [str(count)] + [" ".join(c.pattern for c in p) for p in parts]
    _emit(args, report, lines)
    return OK


def _parse_choices(items: Sequence[str]) -> dict[int, str]:
    out = {}
    for item in items:
        node, sep, choice = item.partition("=")
        if not sep or not node.strip().isdigit():
            raise UsageError(f"--free expects NODE=CHOICE, got {item!r}")
        out[int(node)] = choice.strip()
    return out


def _write_network(f: Network, out: str | None) -> None:
    text = dumps(f)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_generate(args) -> int:
    if args.kind == "arrangement":
        if not args.cubes:
            raise UsageError("generate arrangement needs --cubes")
        spec = ArrangementNetworkSpec.from_patterns(args.cubes, _parse_choices(args.free))
        f = build_arrangement_network(spec)
    elif args.kind == "union":
        if not args.files:
            raise UsageError("generate union needs one or more network files")
        f = union_networks([load(p) for p in args.files])
    else:
        if args.n is None:
            raise UsageError("generate random-cs needs -n")
        f = random_globally_commutative(args.n, np.random.default_rng(args.seed))
    _write_network(f, args.output)
    return OK


def cmd_lift(args) -> int:
    f = load(args.file)
    g = lift_q4(f) if args.kind == "q4" else lift_q3(f)
    _write_network(g, args.output)
    return OK


def cmd_verify(args) -> int:
    from ..verification import FULL, QUICK, criterion_keys, run_suite

    cfg = QUICK if args.quick else FULL
    only = set(args.only) if args.only else None
    if only and not only <= set(criterion_keys()):
        raise UsageError(f"unknown criteria {sorted(only - set(criterion_keys()))}; choose from {criterion_keys()}")

    def progress(res):
        if not args.json:
            print(res.line(), flush=True)
            if args.verbose:
                for note in res.notes:
                    print("    " + note)

    results = run_suite(cfg, only, progress)
    if args.report_dir:
        out = Path(args.report_dir)
        out.mkdir(parents=True, exist_ok=True)
        with open(out / "verify.tsv", "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, delimiter="\t", lineterminator="\n")
            w.writerow(["criterion", "status", "cases", "violations", "seconds", "description", "notes"])
            for r in results:
                w.writerow([r.key, "PASS" if r.passed else "FAIL", r.cases, r.violations,
                            f"{r.seconds:.2f}", r.title, " | ".join(r.notes)])
        from .plotting import verification_figure

        verification_figure([r.key for r in results], [r.cases for r in results],
                            [r.passed for r in results], out / "verify.png")
    ok = all(r.passed for r in results)
    if args.json:
        print(json.dumps({"command": "verify", "passed": ok, "criteria": [
            {"criterion": r.key, "passed": r.passed, "cases": r.cases, "violations": r.violations,
             "seconds": round(r.seconds, 3), "notes": r.notes} for r in results]}, sort_keys=True))
    else:
        print(f"{sum(r.passed for r in results)}/{len(results)} criteria passed")
    return OK if ok else FAILS


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="autonet", description="Analyse finite automata networks under update schedules.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, file=True):
        sp = sub.add_parser(name, help=help_text, description=help_text)
        if file:
            sp.add_argument("file", help="network document (JSON)")
        sp.add_argument("--json", action="store_true", help="print a machine-readable report")
        sp.set_defaults(func=fn)
        return sp

    sp = add("check", cmd_check, "decide a commutativity, locality, bijectivity or idempotence property")
    sp.add_argument("--property", "-p", required=True, choices=PROPERTIES)
    sp.add_argument("--scope", choices=sorted(set(SCOPES) | set(_IC_LEVEL)),
                    help="global, singletons or all-subsets (ic also accepts disjoint-subsets)")
    sp.add_argument("--max-work", type=int, default=2**32, help="refuse scans larger than this (default 2^32)")

    add("dynamics", cmd_dynamics, "transient length, period and fixed points of f")

    sp = add("components", cmd_components, "weak components of the transition graph")
    sp.add_argument("--dot", metavar="FILE", help="write the transition graph as Graphviz DOT")
    sp.add_argument("--full-arcs", action="store_true", help="DOT: draw every arc, not just single-node ones")
    sp.add_argument("--plot", metavar="FILE", help="render the transition graph to an image file")

    sp = add("classify", cmd_classify, "recognise a union of arrangement networks (Boolean only)")
    sp.add_argument("--plot", metavar="FILE", help="render the transition graph to an image file")

    sp = add("influences", cmd_influences, "minimal influences on one local function")
    sp.add_argument("-i", type=int, required=True, help="node (1-based)")
    sp.add_argument("-x", required=True, help="source configuration, e.g. 010")
    sp.add_argument("-y", required=True, help="target configuration")

    sp = add("count-partitions", cmd_count_partitions, "count partitions of the n-cube into subcubes", file=False)
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--list", action="store_true", help="also list the partitions (n <= 4)")
    sp.add_argument("--workers", type=int, default=1)

    sp = add("generate", cmd_generate, "write an arrangement network, a union or a random commutative network",
             file=False)
    sp.add_argument("kind", choices=("arrangement", "union", "random-cs"))
    sp.add_argument("files", nargs="*", help="union: the part networks")
    sp.add_argument("--cubes", nargs="+", metavar="PATTERN", help="arrangement: subcubes such as **0 1**")
    sp.add_argument("--free", nargs="*", default=[], metavar="NODE=CHOICE",
                    help="arrangement: const0, const1 or negate per free dimension")
    sp.add_argument("-n", type=int, help="random-cs: number of nodes")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("-o", "--output", help="output file (default stdout)")

    sp = add("lift", cmd_lift, "lift a Boolean network to q=3 or q=4", file=False)
    sp.add_argument("kind", choices=("q3", "q4"))
    sp.add_argument("file", help="Boolean network document (JSON)")
    sp.add_argument("-o", "--output", help="output file (default stdout)")

    sp = add("verify", cmd_verify, "run the verification suite", file=False)
    sp.add_argument("--quick", action="store_true", help="small sample sizes, no exhaustive n=3 sweep")
    sp.add_argument("--only", nargs="+", metavar="CRITERION")
    sp.add_argument("--report-dir", metavar="DIR", help="write verify.tsv and verify.png here")
    sp.add_argument("-v", "--verbose", action="store_true", help="print notes under each criterion")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FormatError, NetworkError, StateSpaceTooLarge, OSError) as exc:
        print(f"autonet {args.command}: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
