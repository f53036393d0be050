"""Command-line interface.

Exit codes: 0 success (property holds / scan clean), 1 property false or
inconsistent, 2 usage or input errors, 3 scan found a counterexample.
Data goes to stdout, diagnostics to stderr. Floats in JSON output are
rounded to 12 decimal places so identical inputs give byte-identical
reports.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable

from .graph import Graph, Graph6Error, complete, extremal, is_connected, parse_graph6, to_graph6
from .oracle import SizeGuardError, find_fractional_factor, is_fractional_ab_deleted
from .spectral import DEFAULT_TOL, ConvergenceError, feng_yu_bound, hsf_bound, spectral_summary
from .theorems import (
    THEOREM_IDS,
    SharpnessError,
    eval_theorem,
    scan,
    summarize,
    verify_sharpness,
)

__all__ = ["main"]

_TSV_COLUMNS = ("id", "theorem", "hypothesis_met", "oracle", "consistent", "rho", "q", "e", "delta")


def _round_floats(value):
    if isinstance(value, float):
        return round(value, 12)
    if isinstance(value, dict):
        return {k: _round_floats(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round_floats(v) for v in value]
    return value


def _emit(obj) -> None:
    print(json.dumps(_round_floats(obj)))


def _tsv_cell(value) -> str:
    if value is None:
        return "NA"
    if value is True:
        return "true"
    if value is False:
        return "false"
    if isinstance(value, float):
        return format(round(value, 12), ".12g")
    return str(value)


def _read_one_graph(args) -> Graph:
    if getattr(args, "graph6", None) is not None:
        return parse_graph6(args.graph6)
    if getattr(args, "file", None):
        with open(args.file, encoding="ascii") as fh:
            lines = fh.readlines()
    else:
        lines = sys.stdin.readlines()
    for line in lines:
        if line.strip():
            return parse_graph6(line.strip())
    raise ValueError("no input graph: expected one graph6 line")


def _input_lines(args) -> Iterable[str]:
    if getattr(args, "graph6", None) is not None:
        return [args.graph6]
    if getattr(args, "file", None):
        with open(args.file, encoding="ascii") as fh:
            return fh.readlines()
    return sys.stdin


def _add_graph_input(parser: argparse.ArgumentParser) -> None:
    src = parser.add_mutually_exclusive_group()
    src.add_argument("--graph6", help="graph6 string (default: read stdin)")
    src.add_argument("--file", help="path to a graph6 file")


def _cmd_construct(args) -> int:
    if args.family == "complete":
        graph = complete(args.n)
    else:
        if args.a is None:
            raise ValueError("--family extremal requires --a")
        graph = extremal(args.n, args.a)
    print(to_graph6(graph))
    return 0


def _cmd_spectral(args) -> int:
    graph = _read_one_graph(args)
    summary = spectral_summary(graph, args.tol)
    fy = feng_yu_bound(graph) if graph.n >= 2 and is_connected(graph) else None
    _emit(
        {
            "n": graph.n,
            "rho": summary.rho,
            "q": summary.q,
            "hsf_bound": hsf_bound(graph),
            "feng_yu_bound": fy,
            "residual": summary.residual,
            "tol": summary.tol,
        }
    )
    return 0


def _cmd_check(args) -> int:
    graph = _read_one_graph(args)
    verdict, witness = is_fractional_ab_deleted(graph, args.a, args.b, max_n=args.max_n)
    _emit(
        {
            "n": graph.n,
            "a": args.a,
            "b": args.b,
            "verdict": verdict,
            "witness": witness.to_json() if witness is not None else None,
        }
    )
    return 0 if verdict else 1


def _cmd_factor(args) -> int:
    graph = _read_one_graph(args)
    assignment = find_fractional_factor(graph, args.a, args.b)
    payload = {"n": graph.n, "a": args.a, "b": args.b, "exists": assignment is not None}
    if assignment is not None:
        payload.update(assignment.to_json())
    else:
        payload.update({"denominator": 2, "weights": None})
    _emit(payload)
    return 0 if assignment is not None else 1


def _cmd_theorem(args) -> int:
    graph = _read_one_graph(args)
    report = eval_theorem(graph, args.theorem, args.a, args.b, tol=args.tol, max_n=args.max_n)
    _emit(report.to_json())
    return 0 if report.consistent else 1


def _cmd_sharpness(args) -> int:
    try:
        report = verify_sharpness(args.n, args.a, args.b, tol=args.tol)
    except SharpnessError as exc:
        print(f"sharpness violation: {exc}", file=sys.stderr)
        return 1
    _emit(report.to_json())
    return 0


def _cmd_scan(args) -> int:
    records = scan(
        _input_lines(args),
        args.theorem,
        args.a,
        args.b,
        tol=args.tol,
        max_n=args.max_n,
    )
    seen = []
    if args.format == "tsv":
        print("\t".join(_TSV_COLUMNS))
    for record in records:
        seen.append(record)
        if record.error is not None:
            print(f"line {record.index}: {record.error}", file=sys.stderr)
            if args.format == "tsv":
                cells = [str(record.index), args.theorem] + ["NA"] * 7
                print("\t".join(cells))
            else:
                _emit(record.to_json())
            continue
        if args.format == "tsv":
            rep = record.report
            cells = [
                _tsv_cell(record.index),
                rep.theorem_id,
                _tsv_cell(rep.hypothesis_met),
                _tsv_cell(rep.oracle_verdict),
                _tsv_cell(rep.consistent),
                _tsv_cell(rep.hypothesis_values["rho"]),
                _tsv_cell(rep.hypothesis_values["q"]),
                _tsv_cell(rep.hypothesis_values["e"]),
                _tsv_cell(rep.hypothesis_values["delta"]),
            ]
            print("\t".join(cells))
        else:
            _emit(record.to_json())
    counts = summarize(seen)
    _emit(counts)
    return 3 if counts["counterexamples"] else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracdel",
        description="Decide fractional [a,b]-deleted graphs, compute spectral bounds, "
        "and verify the sufficient conditions on graph6 corpora.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit a named family member as graph6")
    p.add_argument("--family", choices=("complete", "extremal"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int)
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("spectral", help="spectral radius, signless Laplacian radius, and bounds")
    _add_graph_input(p)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.set_defaults(handler=_cmd_spectral)

    p = sub.add_parser("check", help="decide whether the graph is fractional [a,b]-deleted")
    _add_graph_input(p)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--max-n", type=int, default=None, dest="max_n")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("factor", help="construct a half-integral fractional [a,b]-factor")
    _add_graph_input(p)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.set_defaults(handler=_cmd_factor)

    p = sub.add_parser("theorem", help="evaluate one sufficient condition plus the exact oracle")
    _add_graph_input(p)
    p.add_argument("--theorem", choices=THEOREM_IDS, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--max-n", type=int, default=None, dest="max_n")
    p.set_defaults(handler=_cmd_theorem)

    p = sub.add_parser("sharpness", help="replay the tightness checks on the extremal graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.set_defaults(handler=_cmd_sharpness)

    p = sub.add_parser("scan", help="stream a graph6 corpus through one condition")
    _add_graph_input(p)
    p.add_argument("--theorem", choices=THEOREM_IDS, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--max-n", type=int, default=None, dest="max_n")
    p.set_defaults(handler=_cmd_scan)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (Graph6Error, SizeGuardError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 1
