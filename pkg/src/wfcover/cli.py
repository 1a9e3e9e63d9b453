"""Command-line interface.

Exit codes: 0 on success, 1 when ``verify`` finds an unexpected
counterexample, 2 on bad input (unreadable or malformed graph file, invalid
family parameters, unknown check id, out-of-range scale).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .constructions import FAMILIES, family
from .forests import check_boundary_characterizations, decide_well_f_covered, enumerate_maximal_forests
from .graph import Graph, GraphError
from .harness import REGISTRY, Scale, UnknownCheckError, emit_report, verify_many
from .independence import enumerate_maximal_independent_sets, independence_verdict
from .reductions import reduce
from .search import EnumerationBudget
from .textformat import read_graph, serialize_graph

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _err(msg: str) -> int:
    print(f"wfcover: error: {msg}", file=sys.stderr)
    return EXIT_USAGE


def _load(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return read_graph(fh.read())


def _sorted_set(s) -> list[int]:
    return sorted(s)


def analysis(G: Graph) -> dict:
    verdict = decide_well_f_covered(G)
    return {
        "graph": {"name": G.name, "n": G.n, "m": G.m},
        "forest": verdict.as_dict(),
        "independence": independence_verdict(G).as_dict(),
        "reduction": reduce(G).as_dict(),
        "boundary": check_boundary_characterizations(G, verdict).agreements(),
    }


def _pretty(report: dict) -> str:
    rows = [("graph", f"{report['graph']['name'] or '-'} (n={report['graph']['n']}, m={report['graph']['m']})")]
    for section in ("forest", "independence"):
        for key, value in report[section].items():
            rows.append((f"{section}.{key}", json.dumps(value)))
    red = report["reduction"]
    rows.append(("reduction.steps", str(len(red["steps"]))))
    rows.append(("reduction.core_n", str(red["core"]["n"])))
    rows.append(("reduction.f_offset", str(red["f_offset"])))
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def cmd_analyze(args) -> int:
    try:
        G = _load(args.path)
    except (OSError, GraphError) as exc:
        return _err(str(exc))
    report = analysis(G)
    print(_pretty(report) if args.pretty else json.dumps(report, indent=2))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    try:
        G = _load(args.path)
    except (OSError, GraphError) as exc:
        return _err(str(exc))
    if args.limit is not None and args.limit < 1:
        return _err("--limit must be positive")
    budget = EnumerationBudget(max_results=args.limit)
    fn = enumerate_maximal_forests if args.kind == "forests" else enumerate_maximal_independent_sets
    result = fn(G, budget)
    for s in result.sets:
        print(" ".join(map(str, _sorted_set(s))))
    if result.truncated:
        print(f"# truncated after {len(result.sets)} sets", file=sys.stderr)
    return EXIT_OK


def cmd_family(args) -> int:
    try:
        res = family(args.name, *args.params)
    except (GraphError, ValueError) as exc:
        return _err(str(exc))
    text = serialize_graph(res.graph, name=f"{args.name} {' '.join(map(str, args.params))}")
    info = f"predicted_f: {res.predicted_f if res.predicted_f is not None else 'none'}"
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            return _err(str(exc))
        print(info)
    else:
        sys.stdout.write(text)
        print(info, file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    ids = list(REGISTRY) if args.ids == ["all"] else args.ids
    try:
        scale = Scale(exhaustive_n_max=args.nmax, factor_n_max=args.factor_nmax,
                      random_trials=args.trials, seed=args.seed)
    except ValueError as exc:
        return _err(str(exc))
    try:
        results = verify_many(ids, scale)
    except UnknownCheckError as exc:
        return _err(f"unknown check id {exc.args[0]!r}; known: {', '.join(REGISTRY)}")
    report = emit_report(results, args.format, seed=args.seed, timestamp=args.timestamp, scale=scale)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(report)
        except OSError as exc:
            return _err(str(exc))
        for r in results:
            print(f"{r.id:12} {r.verdict:18} instances={r.instances_checked} counterexamples={len(r.counterexamples)}")
    else:
        sys.stdout.write(report)
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def cmd_reduce(args) -> int:
    try:
        G = _load(args.path)
    except (OSError, GraphError) as exc:
        return _err(str(exc))
    trace = reduce(G)
    if args.core_out:
        try:
            with open(args.core_out, "w", encoding="utf-8") as fh:
                fh.write(serialize_graph(trace.core))
        except OSError as exc:
            return _err(str(exc))
    print(json.dumps(trace.as_dict(), indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wfcover", description="Analyze well-f-covered graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="decide well-f-coveredness and report forest/independence facts")
    p.add_argument("path")
    p.add_argument("--pretty", action="store_true", help="human-readable table instead of JSON")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("enumerate", help="list maximal induced forests or maximal independent sets")
    p.add_argument("path")
    p.add_argument("--kind", choices=("forests", "mis"), default="forests")
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("family", help="write a named graph family member")
    p.add_argument("name", choices=sorted(FAMILIES))
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="run registered claim checks")
    p.add_argument("ids", nargs="+", help="check ids, or 'all'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--nmax", type=int, default=Scale.exhaustive_n_max, help="exhaustive scan order (<= 6)")
    p.add_argument("--factor-nmax", type=int, default=Scale.factor_n_max, help="join factor order (<= 5)")
    p.add_argument("--trials", type=int, default=Scale.random_trials)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None)
    p.add_argument("--timestamp", default=None, help="string recorded in the report (default: null)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce", help="strip isolated/pendant vertices and bridges")
    p.add_argument("path")
    p.add_argument("--core-out", default=None, help="write the core graph here")
    p.set_defaults(func=cmd_reduce)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
