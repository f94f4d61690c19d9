"""Command line interface.

Graphs travel as graph6 text, one per line; reports are JSON lines on
standard output.  ``-`` reads standard input.  Exit codes: 0 clean, 1 a
counterexample candidate or reportable finding surfaced, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Iterator

from .correspondence import contract, expand
from .errors import Graph6Error, PreconditionFailed, StructureViolation
from .generate import enumerate_cubic_graphs
from .graph6 import parse_graph6, write_graph6
from .graphs import Graph, is_connected
from .recognizers import cycle_spectrum, find_c4, find_claw, girth
from .survey import iter_scan_json, level_structure_audit, scan_corpus
from .witnesses import two_power_cycle_through, two_power_or_triple_cycle


def _read_lines(path: str) -> list[str]:
    if path == "-":
        return sys.stdin.read().splitlines()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read().splitlines()


def _graphs(path: str) -> Iterator[tuple[int, str, Graph | None, str | None]]:
    """(line number, text, graph or None, parse error message or None)."""
    for line_no, text in enumerate(_read_lines(path), start=1):
        stripped = text.strip()
        if not stripped or stripped == ">>graph6<<":
            continue
        try:
            yield line_no, stripped, parse_graph6(text), None
        except Graph6Error as exc:
            yield line_no, stripped, None, str(exc)


def _emit(obj: dict) -> None:
    print(json.dumps(obj))


def cmd_check(args: argparse.Namespace) -> int:
    code = 0
    for line_no, text, g, err in _graphs(args.file):
        if g is None:
            _emit({"line": line_no, "input_error": err})
            code = 2
            continue
        _emit(
            {
                "line": line_no,
                "graph6": text,
                "n": g.n,
                "m": g.edge_count(),
                "min_degree": g.min_degree(),
                "connected": is_connected(g),
                "cubic": g.n > 0 and all(g.degree(v) == 3 for v in range(g.n)),
                "claw_free": find_claw(g) is None,
                "c4_free": find_c4(g) is None,
                "girth": girth(g),
            }
        )
    return code


def cmd_spectrum(args: argparse.Namespace) -> int:
    code = 0
    for line_no, text, g, err in _graphs(args.file):
        if g is None:
            _emit({"line": line_no, "input_error": err})
            code = 2
            continue
        max_len = args.max if args.max is not None else g.n
        spectrum = cycle_spectrum(g, min(max_len, g.n))
        _emit(
            {
                "line": line_no,
                "n": g.n,
                "max_len": min(max_len, g.n),
                "lengths": sorted(spectrum.lengths),
                "witnesses": {str(ln): list(c.vertices) for ln, c in spectrum.witnesses},
            }
        )
    return code


def cmd_witness(args: argparse.Namespace) -> int:
    code = 0
    for line_no, text, g, err in _graphs(args.file):
        if g is None:
            _emit({"line": line_no, "input_error": err})
            code = 2
            continue
        try:
            if args.theorem == "1":
                w = two_power_or_triple_cycle(g)
                payload = {
                    "line": line_no,
                    "form": w.form.value,
                    "k": w.k,
                    "length": w.length,
                    "cycle": list(w.cycle.vertices),
                }
            else:
                if args.vertex is None:
                    print("witness --theorem 5 requires --vertex", file=sys.stderr)
                    return 2
                w = two_power_cycle_through(g, args.vertex)
                payload = {
                    "line": line_no,
                    "vertex": args.vertex,
                    "form": w.form.value,
                    "k": w.k,
                    "length": w.length,
                    "cycle": list(w.cycle.vertices),
                }
            _emit(payload)
        except StructureViolation as exc:
            _emit({"line": line_no, "finding": type(exc).__name__, "detail": str(exc)})
            code = max(code, 1)
        except PreconditionFailed as exc:
            _emit({"line": line_no, "error": type(exc).__name__, "detail": str(exc)})
    return code


def _convert(args: argparse.Namespace, func) -> int:
    code = 0
    for line_no, text, g, err in _graphs(args.file):
        if g is None:
            _emit({"line": line_no, "input_error": err})
            code = 2
            continue
        try:
            print(write_graph6(func(g)))
        except (PreconditionFailed, StructureViolation) as exc:
            _emit({"line": line_no, "error": type(exc).__name__, "detail": str(exc)})
    return code


def cmd_contract(args: argparse.Namespace) -> int:
    return _convert(args, lambda g: contract(g).quotient)


def cmd_expand(args: argparse.Namespace) -> int:
    return _convert(args, expand)


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        for g in enumerate_cubic_graphs(args.n, connected_only=args.connected):
            print(write_graph6(g))
    except PreconditionFailed as exc:
        print(str(exc), file=sys.stderr)
        return 2
    return 0


def cmd_scan(args: argparse.Namespace) -> int:
    checks = ("power2", "conjecture8", "theorem9") if args.check == "all" else (args.check,)
    report = scan_corpus(_read_lines(args.file), checks=checks, jobs=args.jobs)
    for line in iter_scan_json(report):
        print(line)
    return report.exit_code


def cmd_audit(args: argparse.Namespace) -> int:
    code = 0
    for line_no, text, g, err in _graphs(args.file):
        if g is None:
            _emit({"line": line_no, "input_error": err})
            code = 2
            continue
        try:
            report = level_structure_audit(g, args.root)
        except PreconditionFailed as exc:
            _emit({"line": line_no, "error": type(exc).__name__, "detail": str(exc)})
            continue
        _emit(
            {
                "line": line_no,
                "root": report.root,
                "entries": [
                    {
                        "claim": e.claim,
                        "holds": e.holds,
                        "fallback": list(e.fallback.vertices) if e.fallback else None,
                    }
                    for e in report.entries
                ],
                "verdict": report.verdict,
            }
        )
        if report.verdict != "CONSISTENT":
            code = max(code, 1)
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clawcycles",
        description="Recognizers, witnesses, and census tools for power-of-two "
        "cycle lengths in claw-free graphs (graph6 in, JSON lines out).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="recognizer flags per graph")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("spectrum", help="cycle-length spectrum per graph")
    p.add_argument("file")
    p.add_argument("--max", type=int, default=None, help="largest length to report")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("witness", help="constructive cycle witnesses")
    p.add_argument("file")
    p.add_argument("--theorem", choices=("1", "5"), required=True)
    p.add_argument("--vertex", type=int, default=None)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("contract", help="shrink triangles; emit quotient graph6")
    p.add_argument("file")
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("expand", help="replace vertices by triangles; emit graph6")
    p.add_argument("file")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("gen", help="enumerate cubic graphs as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("scan", help="bulk checks over a graph6 corpus")
    p.add_argument("file")
    p.add_argument("--check", choices=("power2", "conjecture8", "theorem9", "all"), required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("audit", help="BFS-level structural audit per graph")
    p.add_argument("file")
    p.add_argument("--root", type=int, default=0)
    p.set_defaults(func=cmd_audit)

    return parser


def main(argv: Iterable[str] | None = None) -> int:
    args = build_parser().parse_args(list(argv) if argv is not None else None)
    return args.func(args)


def entry() -> None:
    raise SystemExit(main())
