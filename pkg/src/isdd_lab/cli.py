"""Command-line front end.

Subcommands: ``compute`` (index values), ``check`` (bound reports),
``classify`` (family membership), ``sweep`` (exhaustive verification), and
``trees`` (tree-mode sweep).  Records go to stdout, diagnostics to stderr.

Exit codes: 0 success; 1 unreadable input or invalid configuration; 2 parse
errors in the input; 3 at least one bound violation (a falsified claim, which
CI must be able to tell apart from bad input).

JSON schemas (--json emits one object per line):

OutputRecord:
    {"input_id": str, "index_vector"?: {"isdd": "p/q", "sdd": "p/q",
     "m1": int, "m2": int, "forgotten": int, "ga": "d.ddddddddd"},
     "bounds"?: [{"bound_id": str, "lhs": "p/q"|float, "rhs": "p/q"|float,
     "holds": bool, "equality": bool, "arithmetic": str, "context": {...}}
     | {"bound_id": str, "skipped": true, "reason": str}],
     "classes"?: {"regular": bool, "regular_degree": int|null, ...}}

SweepReport (--report): {"config": {...}, "graphs_seen": int,
    "graphs_checked": int, "violations": [...],
    "equality_discrepancies": [...], "wall_time": float}.
Rationals always serialize as lowest-terms strings, never floats.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bounds import ALL_BOUND_IDS, BoundReport, SkippedBound, evaluate_all
from .classify import GraphClassLabel, classify
from .enumeration import SweepConfig, run_sweep, stream_graph6
from .graphs import Graph, GraphError, parse_edge_list, parse_graph6
from .indices import fraction_str, index_vector

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_VIOLATION = 3


def _index_vector_json(g: Graph) -> dict:
    iv = index_vector(g)
    return {
        "isdd": fraction_str(iv.isdd),
        "sdd": fraction_str(iv.sdd),
        "m1": iv.m1,
        "m2": iv.m2,
        "forgotten": iv.forgotten,
        "ga": f"{iv.ga:.9f}",
    }


def _bound_json(entry: BoundReport | SkippedBound) -> dict:
    if isinstance(entry, SkippedBound):
        return {"bound_id": entry.bound_id.value, "skipped": True, "reason": entry.reason}
    lhs = entry.lhs if isinstance(entry.lhs, float) else fraction_str(entry.lhs)
    rhs = entry.rhs if isinstance(entry.rhs, float) else fraction_str(entry.rhs)
    return {
        "bound_id": entry.bound_id.value,
        "lhs": lhs,
        "rhs": rhs,
        "holds": entry.holds,
        "equality": entry.equality,
        "arithmetic": entry.arithmetic,
        "context": entry.context,
    }


def _classes_json(label: GraphClassLabel) -> dict:
    return {
        "regular": label.regular,
        "regular_degree": label.regular_degree,
        "semiregular_bipartite": label.semiregular_bipartite,
        "semiregular_pair": list(label.semiregular_pair) if label.semiregular_pair else None,
        "gamma1": label.gamma1,
        "gamma2": label.gamma2,
        "gamma3": label.gamma3,
        "constant_edge_ratio": label.constant_edge_ratio,
        "edge_ratio": fraction_str(label.edge_ratio) if label.edge_ratio is not None else None,
    }


def _read_input(path: str) -> str | None:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        return None


def _iter_graphs(text: str, fmt: str, source: str):
    """Yield (input_id, Graph | error message) for each graph in the input."""
    if fmt == "edgelist":
        try:
            yield source, parse_edge_list(text)
        except GraphError as exc:
            yield source, str(exc)
        return
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            yield line, parse_graph6(line)
        except GraphError as exc:
            yield f"{source}:{line_no}", str(exc)


def _parse_bounds(text: str) -> tuple[str, ...]:
    if text == "all":
        return ALL_BOUND_IDS
    chosen = tuple(token.strip().upper() for token in text.split(",") if token.strip())
    unknown = set(chosen) - set(ALL_BOUND_IDS)
    if unknown:
        raise ValueError(f"unknown bound ids: {sorted(unknown)} (known: {', '.join(ALL_BOUND_IDS)})")
    return chosen


def _human_indices(input_id: str, g: Graph) -> str:
    iv = index_vector(g)
    return (
        f"{input_id}: n={g.n} m={g.m} isdd={fraction_str(iv.isdd)} sdd={fraction_str(iv.sdd)} "
        f"m1={iv.m1} m2={iv.m2} f={iv.forgotten} ga={iv.ga:.9f}"
    )


def cmd_compute(args) -> int:
    text = _read_input(args.input)
    if text is None:
        return EXIT_USAGE
    status = EXIT_OK
    for input_id, item in _iter_graphs(text, args.format, args.input):
        if isinstance(item, str):
            status = EXIT_PARSE
            if args.json:
                print(json.dumps({"input_id": input_id, "error": item}))
            print(f"parse error at {input_id}: {item}", file=sys.stderr)
            continue
        if args.json:
            print(json.dumps({"input_id": input_id, "index_vector": _index_vector_json(item)}))
        else:
            print(_human_indices(input_id, item))
    return status


def cmd_check(args) -> int:
    text = _read_input(args.input)
    if text is None:
        return EXIT_USAGE
    try:
        selected = _parse_bounds(args.bounds)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    status = EXIT_OK
    any_violation = False
    for input_id, item in _iter_graphs(text, args.format, args.input):
        if isinstance(item, str):
            status = EXIT_PARSE
            if args.json:
                print(json.dumps({"input_id": input_id, "error": item}))
            print(f"parse error at {input_id}: {item}", file=sys.stderr)
            continue
        if item.m == 0:
            status = EXIT_PARSE
            print(f"skipping {input_id}: no edges, nothing to check", file=sys.stderr)
            continue
        entries = [
            e for e in evaluate_all(item)
            if (e.bound_id.value in selected)
        ]
        for e in entries:
            if isinstance(e, BoundReport) and not e.holds:
                any_violation = True
        if args.json:
            print(json.dumps({
                "input_id": input_id,
                "bounds": [_bound_json(e) for e in entries],
            }))
        else:
            print(f"{input_id}:")
            for e in entries:
                if isinstance(e, SkippedBound):
                    print(f"  {e.bound_id.value}: skipped ({e.reason})")
                    continue
                lhs = e.lhs if isinstance(e.lhs, float) else fraction_str(e.lhs)
                rhs = e.rhs if isinstance(e.rhs, float) else fraction_str(e.rhs)
                verdict = "HOLDS" if e.holds else "VIOLATED"
                eq = " equality" if e.equality else ""
                print(f"  {e.bound_id.value}: {verdict}{eq} lhs={lhs} rhs={rhs}")
    if any_violation:
        return EXIT_VIOLATION
    return status


def cmd_classify(args) -> int:
    text = _read_input(args.input)
    if text is None:
        return EXIT_USAGE
    status = EXIT_OK
    for input_id, item in _iter_graphs(text, args.format, args.input):
        if isinstance(item, str):
            status = EXIT_PARSE
            if args.json:
                print(json.dumps({"input_id": input_id, "error": item}))
            print(f"parse error at {input_id}: {item}", file=sys.stderr)
            continue
        label = classify(item)
        if args.json:
            print(json.dumps({"input_id": input_id, "classes": _classes_json(label)}))
        else:
            parts = []
            if label.regular:
                parts.append(f"regular(r={label.regular_degree})")
            if label.semiregular_bipartite:
                r, s = label.semiregular_pair
                parts.append(f"semiregular_bipartite({r},{s})")
            for name, flag in (("gamma1", label.gamma1), ("gamma2", label.gamma2),
                               ("gamma3", label.gamma3)):
                if flag:
                    parts.append(name)
            if label.constant_edge_ratio:
                parts.append(f"constant_edge_ratio({fraction_str(label.edge_ratio)})")
            print(f"{input_id}: {' '.join(parts) if parts else 'no class memberships'}")
    return status


def _resolve_jobs(args) -> int:
    if args.jobs is not None:
        return max(1, args.jobs)
    env = os.environ.get("ISDD_LAB_JOBS", "")
    if env.strip():
        try:
            return max(1, int(env))
        except ValueError:
            print(f"warning: ignoring bad ISDD_LAB_JOBS={env!r}", file=sys.stderr)
    return os.cpu_count() or 1


def _run_sweep_command(args, trees: bool) -> int:
    try:
        selected = _parse_bounds(args.bounds)
        cfg = SweepConfig(
            n_min=args.n_min,
            n_max=args.n_max,
            connected_only=args.connected,
            dedup=args.dedup,
            bounds=selected,
            max_graphs=args.max_graphs,
            trees=trees,
        )
        if not args.stdin_graph6:
            cfg.validate()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    jobs = _resolve_jobs(args)
    if args.stdin_graph6:
        report = run_sweep(cfg, jobs=1, graphs=stream_graph6(sys.stdin))
    else:
        report = run_sweep(cfg, jobs=jobs)
    payload = {"config": {
        "n_min": cfg.n_min,
        "n_max": cfg.n_max,
        "connected_only": cfg.connected_only,
        "dedup": cfg.dedup,
        "bounds": list(cfg.bounds),
        "max_graphs": cfg.max_graphs,
        "trees": cfg.trees,
    }}
    payload.update(report.to_dict())
    if args.report:
        with open(args.report, "w", encoding="ascii") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    print(
        f"seen={report.graphs_seen} checked={report.graphs_checked} "
        f"violations={len(report.violations)} "
        f"equality_discrepancies={len(report.equality_discrepancies)} "
        f"wall_time={report.wall_time:.2f}s",
        file=sys.stderr,
    )
    for v in report.violations:
        print(f"VIOLATION {v.bound_id} {v.graph6} lhs={v.lhs} rhs={v.rhs}")
    for d in report.equality_discrepancies:
        print(
            f"equality_discrepancy {d.bound_id} {d.graph6} equality={d.equality} "
            f"expected_one_of={','.join(d.expected_classes)} "
            f"actual={','.join(d.actual_classification) if d.actual_classification else 'none'}"
        )
    return EXIT_VIOLATION if report.violations else EXIT_OK


def cmd_sweep(args) -> int:
    return _run_sweep_command(args, trees=args.trees)


def cmd_trees(args) -> int:
    return _run_sweep_command(args, trees=True)


def _add_input_flags(p: argparse.ArgumentParser):
    p.add_argument("--input", default="-", help="input path or - for stdin (default: -)")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6",
                   help="input format (default: graph6, one graph per line)")
    p.add_argument("--json", action="store_true", help="emit one JSON object per record")


def _add_sweep_flags(p: argparse.ArgumentParser, tree_defaults: bool):
    p.add_argument("--n-min", type=int, default=4 if tree_defaults else 2)
    p.add_argument("--n-max", type=int, default=9 if tree_defaults else 6)
    p.add_argument("--connected", action=argparse.BooleanOptionalAction, default=True,
                   help="restrict to connected graphs (default: true)")
    p.add_argument("--bounds", default="all", help="'all' or comma list of bound ids")
    p.add_argument("--dedup", action="store_true",
                   help="one representative per isomorphism class (serial)")
    p.add_argument("--max-graphs", type=int, default=None)
    p.add_argument("--jobs", type=int, default=None,
                   help="parallel workers (default: ISDD_LAB_JOBS or CPU count)")
    p.add_argument("--report", default=None, help="write the JSON report to this path")
    p.add_argument("--stdin-graph6", action="store_true",
                   help="check graph6 lines from stdin instead of enumerating")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isdd-lab",
        description="Exact index computation and brute-force bound verification "
                    "for degree-based graph invariants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="index values per input graph")
    _add_input_flags(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("check", help="evaluate bounds per input graph")
    _add_input_flags(p)
    p.add_argument("--bounds", default="all", help="'all' or comma list of bound ids")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify", help="extremal-family membership per input graph")
    _add_input_flags(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("sweep", help="exhaustive verification over small graphs")
    _add_sweep_flags(p, tree_defaults=False)
    p.add_argument("--trees", action="store_true", help="enumerate labeled trees instead")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("trees", help="exhaustive verification over labeled trees")
    _add_sweep_flags(p, tree_defaults=True)
    p.set_defaults(func=cmd_trees)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
