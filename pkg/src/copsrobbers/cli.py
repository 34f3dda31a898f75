"""Command-line front end; JSON reports go to stdout, diagnostics to stderr.

Exit codes: 0 success, 1 usage or parse error, 2 resource budget exceeded,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from pathlib import Path

from . import __version__
from .campaigns import parse_theorem, run_campaign
from .enumerate import MAX_ENUMERATION_ORDER, enumerate_connected
from .generators import generate
from .graph import Graph, GraphError
from .io import emit_graph6, format_graph, read_graph
from .patterns import find_induced, parse_family
from .solver import DEFAULT_STATE_BUDGET, BudgetExceeded, solve
from .transforms import clique_substitution, subdivide

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_VERIFY = 0, 1, 2, 3
MAX_CLASS_ORDER = 8
OUTPUT_SUFFIXES = {".g6": "graph6", ".edges": "edgelist", ".txt": "edgelist", ".dot": "dot"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _report(command: str, seed, started: float, **body) -> dict:
    return {
        "command": command,
        **body,
        "timing": {"seconds": round(time.perf_counter() - started, 4)},
        "seed": seed,
        "version": __version__,
    }


def _emit(report: dict) -> None:
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _load(args) -> Graph:
    if args.input is not None:
        try:
            return read_graph(args.input)
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from exc
    return generate(args.gen)


def _describe(G: Graph) -> dict:
    return {"n": G.n, "m": G.m, "graph6": emit_graph6(G)}


def _finite(t: float):
    return None if math.isinf(t) else int(t)


def cmd_copnum(args) -> int:
    started = time.perf_counter()
    G = _load(args)
    kmax = args.kmax if args.kmax is not None else max(G.n, 1)
    times: dict[str, int | None] = {}
    c = None
    for k in range(1, kmax + 1):
        t = solve(G, k, args.budget).capture_time
        times[str(k)] = _finite(t)
        if not math.isinf(t):
            c = k
            break
    if c is None:
        raise BudgetExceeded(f"robber escapes every cop count up to --kmax {kmax}")
    _emit(
        _report(
            "copnum",
            None,
            started,
            instances=1,
            graph=_describe(G),
            cop_number=c,
            capture_time=times[str(c)],
            capture_time_by_k=times,
        )
    )
    return EXIT_OK


def cmd_freecheck(args) -> int:
    started = time.perf_counter()
    G = _load(args)
    F = parse_family(args.family)
    witness = None
    for H in F:
        phi = find_induced(G, H)
        if phi is not None:
            witness = {"pattern": H.name, "map": phi}
            break
    _emit(
        _report(
            "freecheck",
            None,
            started,
            instances=1,
            graph=_describe(G),
            family=[H.name for H in F],
            free=witness is None,
            witness=witness,
        )
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    started = time.perf_counter()
    name, _ = parse_theorem(args.theorem)
    cap = MAX_ENUMERATION_ORDER if name == "monotone" else MAX_CLASS_ORDER
    if name != "predict" and not 1 <= args.nmax <= cap:
        raise UsageError(f"--nmax must lie in 1..{cap} for {name}")
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    summary = run_campaign(args.theorem, args.nmax, args.jobs)
    results = summary.pop("results")
    report = _report(
        "verify",
        args.seed,
        started,
        nmax=args.nmax,
        jobs=args.jobs,
        **summary,
        results=results if args.full else None,
    )
    _emit(report)
    if summary["failed"]:
        print(f"verify: {summary['failed']} of {summary['instances']} instances failed", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def _write_graphs(graphs: list[Graph], fmt: str | None, out: str | None) -> None:
    if out is not None and fmt is None:
        fmt = OUTPUT_SUFFIXES.get(Path(out).suffix)
        if fmt is None:
            raise UsageError(f"cannot infer output format from {out!r}; pass --format")
    text = "".join(format_graph(G, fmt or "graph6") for G in graphs)
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_gen(args) -> int:
    _write_graphs([generate(args.spec)], args.format, args.out)
    return EXIT_OK


def apply_transform(G: Graph, op: str) -> Graph:
    name, _, param = op.partition(":")
    if name == "cliquesub" and not param:
        return clique_substitution(G)[0]
    if name == "subdivide" and param.isdigit():
        return subdivide(G, int(param))
    raise UsageError(f"unknown transform {op!r}; use cliquesub or subdivide:k")


def cmd_transform(args) -> int:
    G = _load(args)
    _write_graphs([apply_transform(G, args.op)], args.format, args.out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    _write_graphs(list(enumerate_connected(args.n)), args.format, args.out)
    return EXIT_OK


def _graph_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--in", dest="input", metavar="FILE", help="graph file (.g6 or .edges)")
    src.add_argument("--gen", metavar="SPEC", help="generated graph, e.g. cycle:6 or gnp:12,0.3,42")


def _graph_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["graph6", "edgelist", "dot"], help="output format (default graph6)")
    p.add_argument("--out", metavar="FILE", help="write to FILE; format inferred from .g6/.edges/.dot")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="copsrobbers", description="Cops and robbers on finite graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("copnum", help="exact cop number and capture time")
    _graph_source(p)
    p.add_argument("--kmax", type=int, help="largest cop count to try (default n)")
    p.add_argument("--budget", type=int, default=DEFAULT_STATE_BUDGET, help="state-count cap per solve")
    p.set_defaults(func=cmd_copnum)

    p = sub.add_parser("freecheck", help="test for induced copies of a family")
    _graph_source(p)
    p.add_argument("--family", required=True, help='family spec, e.g. "claw,bull" or "claw+p2,net+p2"')
    p.set_defaults(func=cmd_freecheck)

    p = sub.add_parser("verify", help="run a verification campaign")
    p.add_argument("--theorem", required=True, help="cl1|cl2|cl3|pkfree:k|clawnet:n|monotone|layers:variant|predict")
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0, help="recorded in the report; campaigns are exhaustive")
    p.add_argument("--full", action="store_true", help="include per-instance results")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a graph")
    p.add_argument("spec")
    _graph_output(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("transform", help="apply cliquesub or subdivide:k")
    _graph_source(p)
    p.add_argument("--op", required=True, help="cliquesub or subdivide:k")
    _graph_output(p)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("enumerate", help=f"all connected graphs on n <= {MAX_ENUMERATION_ORDER} vertices")
    p.add_argument("n", type=int)
    _graph_output(p)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
