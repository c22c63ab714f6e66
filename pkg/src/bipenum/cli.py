"""Command-line frontend.

Exit codes: 0 success, 1 verification mismatch, 2 input error, 3 cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import runner
from .graph import GraphFormatError, degeneracy_ordering, parse_graph
from .journal import SolutionCapExceeded
from .oracle import OracleLimitExceeded

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load(args):
    try:
        if args.input in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        return parse_graph(text, args.format)
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc.strerror}") from exc
    except (GraphFormatError, UnicodeDecodeError) as exc:
        raise InputError(str(exc)) from exc


def cmd_enumerate(args, out) -> int:
    g = _load(args)
    h, _ = runner.prepare(g)
    names = h.names
    if args.count_only:
        sink = None
    elif args.mode == "induced":
        def sink(sol):
            out.write(" ".join(map(str, sorted(names[v] for v in sol))) + "\n")
    elif args.expand_edges:
        def sink(sol):
            pairs = (sorted((names[u], names[v])) for _, (u, v) in
                     sorted((h.edge_names[e], h.edges[e]) for e in sol))
            out.write("".join(f"({a},{b})" for a, b in pairs) + "\n")
    else:
        def sink(sol):
            out.write(" ".join(map(str, sorted(h.edge_names[e] for e in sol))) + "\n")
    try:
        report = runner.run(g, args.mode, sink, cap=args.cap)
    except SolutionCapExceeded as exc:
        print(f"error: solution cap exceeded ({exc.cap}); raise --cap", file=sys.stderr)
        return EXIT_CAP
    if args.count_only:
        out.write(f"{report.solutions}\n")
    _report(report, args.report_json)
    return EXIT_OK


def _report(report, path):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(report.as_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    else:
        c = report.counters
        print(
            f"# {report.mode}: n={report.n} m={report.m} k={report.k} "
            f"solutions={report.solutions} time={report.wall_time:.3f}s "
            f"edits={c['edits']} work={c['work']} peak_log={c['peak_log']} "
            f"edits/solution={report.edits_per_solution:.2f}",
            file=sys.stderr,
        )


def cmd_verify(args, out) -> int:
    g = _load(args)
    try:
        verdict = runner.verify(g, args.mode, limit=args.limit)
    except OracleLimitExceeded as exc:
        print(f"error: refusing to verify: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if verdict.ok:
        out.write(f"PASS {args.mode}: {verdict.solutions} solutions\n")
        return EXIT_OK
    out.write(
        f"FAIL {args.mode}: {verdict.solutions} emitted, {verdict.expected} expected; "
        f"{verdict.first_discrepancy()}\n"
    )
    return EXIT_MISMATCH


def cmd_bench(args, out) -> int:
    try:
        sizes = runner.parse_sizes(args.sizes)
    except ValueError:
        raise InputError(f"bad --sizes {args.sizes!r}") from None
    try:
        rows = runner.sweep(args.mode, args.family, sizes, seed=args.seed, cap=args.cap)
    except SolutionCapExceeded as exc:
        print(f"error: size {exc.size} exceeds the solution cap ({exc.cap})", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    out.write("size\tn\tm\tk\tsolutions\tedits/sol\twork/sol\twork/(k*sol)\tspace/(n+m)\n")
    for size, r in rows:
        k = max(r.k, 1)
        out.write(
            f"{size}\t{r.n}\t{r.m}\t{r.k}\t{r.solutions}\t{r.edits_per_solution:.3f}\t"
            f"{r.work_per_solution:.3f}\t{r.work_per_solution / k:.3f}\t{r.space_ratio:.3f}\n"
        )
    return EXIT_OK


def cmd_degeneracy(args, out) -> int:
    g = _load(args)
    ordering = degeneracy_ordering(g)
    out.write(f"k={ordering.k}\n")
    out.write(" ".join(str(g.names[v]) for v in ordering.order) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bipenum",
        description="Enumerate connected bipartite induced subgraphs or edge subgraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(p):
        p.add_argument("input", nargs="?", default="-", help="graph file, '-' for stdin")
        p.add_argument("--format", choices=("edgelist", "dimacs"), default=None,
                       help="input format (default: sniff for a 'p' line)")

    def mode_arg(p):
        p.add_argument("--mode", choices=runner.MODES, default="induced")

    p = sub.add_parser("enumerate", help="stream all solutions")
    graph_args(p)
    mode_arg(p)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--report-json", metavar="PATH")
    p.add_argument("--cap", type=int, default=runner.DEFAULT_CAP)
    p.add_argument("--expand-edges", action="store_true",
                   help="print edge solutions as (u,v) pairs instead of edge indices")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="compare against the brute-force oracle")
    graph_args(p)
    mode_arg(p)
    p.add_argument("--limit", type=int, default=20, help="oracle size limit")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="amortized cost over a family of growing graphs")
    mode_arg(p)
    p.add_argument("--family", choices=sorted(runner.generators.FAMILIES), default="path")
    p.add_argument("--sizes", default="10..14")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=runner.DEFAULT_CAP)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("degeneracy", help="print k and the peeling order")
    graph_args(p)
    p.set_defaults(func=cmd_degeneracy)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
