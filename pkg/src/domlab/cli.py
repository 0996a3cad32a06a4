"""Command-line entry point: ``domlab classify | construct | census | verify``.

Exit codes: 0 success, 1 verification violation, 2 input error,
3 precondition error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator, Sequence, TextIO

from . import __version__
from .census import matches, render_csv, render_jsonl, run_census
from .construct import construct
from .edge_classify import GraphVerdict, classify_graph
from .enumeration import all_connected_graphs, all_trees, read_graph6_lines, to_graph6
from .errors import InputError, MalformedInput, PreconditionError
from .graph import Graph, parse_edgelist
from .verify import REGISTRY, Scope, run_verify

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2, 3

CLASSIFY_SCHEMA = "domlab.classify/1"


def _read_graphs(stream: TextIO, fmt: str) -> Iterator[tuple[int, Graph]]:
    if fmt == "edgelist":
        yield 1, parse_edgelist(stream.read())
    else:
        yield from read_graph6_lines(stream)


def classify_record(g: Graph, result: GraphVerdict) -> dict:
    gamma = result.profiles[0].gamma if result.profiles else None
    return {
        "schema": CLASSIFY_SCHEMA,
        "graph6": to_graph6(g),
        "n": g.n,
        "m": g.m,
        "gamma": gamma,
        "verdict": result.verdict.value,
        "edges": [
            {
                "u": p.edge.u,
                "v": p.edge.v,
                "gamma_removed": p.gamma_removed,
                "gamma_subdivided": p.gamma_subdivided,
                "relation": p.relation.value,
                "bondage": p.is_bondage,
                "weak": p.is_weak,
                "strong": p.is_strong,
            }
            for p in result.profiles
        ],
    }


def render_classify_table(rec: dict) -> str:
    head = (f"graph {rec['graph6']}  n={rec['n']} m={rec['m']} "
            f"gamma={rec['gamma']}  verdict={rec['verdict']}")
    rows = [("edge", "G-e", "G_e", "relation", "bondage", "weak", "strong")]
    yn = {True: "yes", False: "-"}
    for e in rec["edges"]:
        rows.append((f"{e['u']}-{e['v']}", str(e["gamma_removed"]), str(e["gamma_subdivided"]),
                     e["relation"], yn[e["bondage"]], yn[e["weak"]], yn[e["strong"]]))
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    body = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join([head] + ["  " + line for line in body])


def cmd_classify(args: argparse.Namespace, out: TextIO) -> int:
    stream = open(args.input) if args.input not in (None, "-") else sys.stdin
    try:
        graphs = list(_read_graphs(stream, args.format))
        for lineno, g in graphs:
            try:
                result = classify_graph(g)
            except PreconditionError as exc:
                raise type(exc)(f"graph at line {lineno}: {exc}") from exc
            rec = classify_record(g, result)
            if args.json:
                out.write(json.dumps(rec, sort_keys=True) + "\n")
            else:
                out.write(render_classify_table(rec) + "\n")
    finally:
        if stream is not sys.stdin:
            stream.close()
    return EXIT_OK


def cmd_construct(args: argparse.Namespace, out: TextIO) -> int:
    words = " ".join(args.spec).split()
    out.write(to_graph6(construct(words)) + "\n")
    return EXIT_OK


def _parse_filters(raw: Sequence[str]) -> list[tuple[str, str]]:
    out = []
    for item in raw:
        key, sep, value = item.partition("=")
        if not sep:
            raise MalformedInput(f"filter {item!r} is not key=value")
        out.append((key.strip(), value.strip()))
    return out


def cmd_census(args: argparse.Namespace, out: TextIO) -> int:
    if args.trees is not None:
        if args.trees < 2:
            raise PreconditionError("census needs graphs on at least 2 vertices")
        graphs = list(all_trees(args.trees))
    elif args.connected is not None:
        if args.connected < 2:
            raise PreconditionError("census needs graphs on at least 2 vertices")
        graphs = list(all_connected_graphs(args.connected))
    else:
        with (open(args.input) if args.input != "-" else sys.stdin) as stream:
            graphs = [g for _, g in read_graph6_lines(stream)]
    filters = _parse_filters(args.filter)
    records = [r for r in run_census(graphs, jobs=args.jobs) if matches(r, filters)]
    lines = render_jsonl(records) if args.out == "jsonl" else render_csv(records)
    for line in lines:
        out.write(line + "\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    if args.list:
        for tid, th in REGISTRY.items():
            out.write(f"{tid:18}  {th.claim}\n")
        return EXIT_OK
    report = run_verify(args.theorem or None, Scope(args.max_tree_n, args.max_graph_n))
    out.write(report.table() + "\n")
    if args.json:
        payload = json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"
        if args.json == "-":
            out.write(payload)
        else:
            with open(args.json, "w") as fh:
                fh.write(payload)
    return EXIT_OK if report.passed else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domlab",
        description="Domination under edge removal and edge subdivision.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="SR/ASR verdict and per-edge profile")
    p.add_argument("input", nargs="?", default="-", help="file path, or - for stdin")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p.add_argument("--json", action="store_true", help="one JSON record per graph")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("construct", help="print a family member as graph6")
    p.add_argument("spec", nargs="+", help="e.g. 'path 7', 'corona path 3', 'gt corona(k2) corona(k2) u=0 v=0 t=3'")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("census", help="classify every graph of a family")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--trees", type=int, metavar="N")
    src.add_argument("--connected", type=int, metavar="N")
    src.add_argument("--input", metavar="FILE", help="newline-delimited graph6")
    p.add_argument("--out", choices=("jsonl", "csv"), default="jsonl")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--filter", action="append", default=[], metavar="KEY=VALUE")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="run the exhaustive theorem checks")
    p.add_argument("--theorem", action="append", metavar="ID")
    p.add_argument("--max-tree-n", type=int)
    p.add_argument("--max-graph-n", type=int)
    p.add_argument("--json", metavar="FILE", help="write the report as JSON (- for stdout)")
    p.add_argument("--list", action="store_true", help="list theorem ids and exit")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = out or sys.stdout
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"domlab: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"domlab: precondition error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except OSError as exc:
        print(f"domlab: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
