"""Command-line interface: analyze / cover / iso / family / census over
graph6 inputs.

Machine-readable output (JSON, CSV, graph6) goes to stdout; diagnostics to
stderr. Exit codes: 0 success, 1 usage or domain error, 2 input parse
error, 3 soundness inconsistency (a criterion contradicted the direct
stability computation, which always means an implementation bug).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .graph_core import Graph, GraphParseError, parse_graph6, write_graph6
from .aut import are_isomorphic
from .cover import double_cover, stability_report
from .criteria import SoundnessError, criteria_summary
from .families import extend_xab, johnson, lexcycle
from .census import BUILTIN_MAX_ORDER, census_row

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_SOUNDNESS = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse variant that raises instead of exiting with status 2."""

    def error(self, message):
        raise _UsageError(message)


def _read_graph(arg: str) -> Graph:
    if arg == "-":
        arg = sys.stdin.readline()
        if not arg.strip():
            raise GraphParseError("no graph6 record on standard input")
    return parse_graph6(arg.strip())


def _cmd_analyze(args) -> int:
    g = _read_graph(args.graph)
    report = stability_report(g)
    payload = report.as_dict()
    if args.criteria:
        verdicts = criteria_summary(g)
        payload["criteria"] = [v.as_dict() for v in verdicts]
    print(json.dumps(payload))
    human = (f"n={report.n} |Aut(X)|={report.aut_x_order} "
             f"|Aut(BX)|={report.aut_bx_order} -> {report.classification}")
    if report.reasons:
        human += " (" + ", ".join(report.reasons) + ")"
    if not report.stable:
        human += f", instability index {report.instability_index}"
    print(human, file=sys.stderr)
    return EXIT_OK


def _cmd_cover(args) -> int:
    g = _read_graph(args.graph)
    print(write_graph6(double_cover(g).cover))
    return EXIT_OK


def _cmd_iso(args) -> int:
    g = _read_graph(args.left)
    h = _read_graph(args.right)
    print("true" if are_isomorphic(g, h) else "false")
    return EXIT_OK


def _parse_vertex_list(text: Optional[str]) -> frozenset:
    if not text:
        return frozenset()
    return frozenset(int(tok) for tok in text.split(",") if tok.strip() != "")


def _cmd_family(args) -> int:
    if args.family == "johnson":
        print(write_graph6(johnson(args.n, args.k)))
    elif args.family == "lexcycle":
        h = _read_graph(args.h)
        print(write_graph6(lexcycle(args.m, h)))
    elif args.family == "xab":
        base = _read_graph(args.base)
        ext = extend_xab(base, _parse_vertex_list(args.a),
                         _parse_vertex_list(args.b))
        print(write_graph6(ext.result))
    return EXIT_OK


def _cmd_census(args) -> int:
    collect = [] if args.emit_ntu else None
    if args.stream:
        with open(args.stream, "r", encoding="ascii") as handle:
            row = census_row(args.n, source=handle, threads=args.threads,
                             collect_ntu=collect)
    else:
        max_builtin = 10 if args.big else BUILTIN_MAX_ORDER
        row = census_row(args.n, threads=args.threads, collect_ntu=collect,
                         max_builtin=max_builtin)
    if args.csv:
        print("n,cnbtf,ntu,xab")
        print(row.as_csv())
    else:
        print(f"{'n':>4} {'cnbtf':>10} {'ntu':>8} {'xab':>8}")
        print(f"{row.n:>4} {row.count_cnbtf:>10} {row.count_ntu:>8} "
              f"{row.count_xab:>8}")
    if args.emit_ntu:
        with open(args.emit_ntu, "w", encoding="ascii") as out:
            for line in collect:
                out.write(line + "\n")
        print(f"wrote {len(collect)} graphs to {args.emit_ntu}",
              file=sys.stderr)
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="coverstab",
                     description="Graph stability via canonical double covers")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="stability report for one graph")
    p.add_argument("graph", help="graph6 record, or - for stdin")
    p.add_argument("--criteria", action="store_true",
                   help="append criterion verdicts")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("cover", help="emit the canonical double cover")
    p.add_argument("graph", help="graph6 record, or - for stdin")
    p.set_defaults(func=_cmd_cover)

    p = sub.add_parser("iso", help="canonical-form isomorphism test")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("family", help="emit a named family member")
    fam = p.add_subparsers(dest="family", required=True)
    pj = fam.add_parser("johnson")
    pj.add_argument("--n", type=int, required=True)
    pj.add_argument("--k", type=int, required=True)
    pl = fam.add_parser("lexcycle")
    pl.add_argument("--m", type=int, required=True)
    pl.add_argument("--h", required=True, help="graph6 of the second factor")
    px = fam.add_parser("xab")
    px.add_argument("--base", required=True, help="graph6 of the base graph")
    px.add_argument("--a", default="", help="comma-separated vertices of A")
    px.add_argument("--b", default="", help="comma-separated vertices of B")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("census", help="census counts for one order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stream", help="graph6 file with the order-n graphs")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--emit-ntu", metavar="FILE",
                   help="write non-trivially unstable representatives")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--big", action="store_true",
                   help="allow built-in generation beyond order "
                        f"{BUILTIN_MAX_ORDER} (slow)")
    p.set_defaults(func=_cmd_census)
    return parser


def run(argv: Sequence[str]) -> int:
    """Dispatch a command line; returns the exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GraphParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SoundnessError as exc:
        print(f"soundness inconsistency: {exc}", file=sys.stderr)
        return EXIT_SOUNDNESS
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
