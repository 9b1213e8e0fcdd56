"""``seqsat`` command line.

Exit status: 0 when the requested property holds, 1 for a domain failure
(the property fails or a module raised), 2 for usage and parse errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import constructions as C
from .core import Pattern, Seq, contains, contains_through, format_seq, parse_pattern, parse_seq
from .emit import scatter_svg, to_json
from .errors import ParseError, SeqSatError
from .exact import ENGINES, build_ilp, export_lp, sat_exact
from .saturation import Verdict, greedy_saturate, scan, verify

FAMILIES = ("sr", "sr-prime", "blocks", "s-bracket", "alternation", "abcacbc", "infinite")
OK, FAIL, USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(to_json({"error": {"type": "UsageError", "message": message}}))
        raise SystemExit(USAGE)


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def _pattern(text: str) -> Pattern:
    try:
        return parse_pattern(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _write(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_check(args) -> int:
    seq = parse_seq(args.seq)
    n = args.n if args.n is not None else seq.n
    report = verify(seq, n, args.pattern)
    payload = {"command": "check", "seq": format_seq(seq), "n": n,
               "pattern": str(args.pattern), **report.to_dict()}
    _write(None, to_json(payload))
    return OK if report.saturated else FAIL


def cmd_contains(args) -> int:
    seq = parse_seq(args.seq)
    payload = {"command": "contains", "seq": format_seq(seq), "pattern": str(args.pattern)}
    if args.through is not None:
        found = contains_through(seq, args.pattern, args.through)
        payload.update(through=args.through, contains=found)
    else:
        copy = contains(seq, args.pattern)
        found = copy is not None
        payload.update(contains=found, copy=None if copy is None else list(copy))
    _write(None, to_json(payload))
    return OK if found else FAIL


def cmd_greedy(args) -> int:
    seq = greedy_saturate(args.n, args.pattern)
    if args.svg:
        Path(args.svg).write_text(scatter_svg(seq, f"greedy {args.pattern} n={args.n}"))
    if args.format == "json":
        report = verify(seq, args.n, args.pattern)
        _write(args.output, to_json({
            "command": "greedy", "pattern": str(args.pattern), "n": args.n,
            "length": len(seq), "seq": list(seq), "verdict": report.verdict.value,
        }))
    else:
        _write(args.output, format_seq(seq) + "\n")
    return OK


def _construct(args) -> tuple[C.ConstructionResult | Seq, bool]:
    u, n, fam = args.pattern, args.n, args.family
    if fam == "alternation":
        res = C.alternation_family(n, args.t, args.variant)
        return res, res.verdict is Verdict.SATURATED
    if fam == "abcacbc":
        res = C.closed_form_abcacbc(n)
        return res, res.verdict is Verdict.SATURATED
    if u is None:
        raise SeqSatError(f"family {fam} needs --pattern")
    if fam in ("sr", "sr-prime"):
        letters = C.s_r(u) if fam == "sr" else C.s_r_prime(u)
        n = letters.n if n is None else n
        res = C._result(letters.letters, n, u, fam, len(letters))
        # s_r(u) is claimed saturated on its own r letters; s_r'(u) is a building block only
        return res, fam == "sr-prime" or res.verdict is Verdict.SATURATED
    if n is None:
        raise SeqSatError(f"family {fam} needs --n")
    if fam == "blocks":
        res = C.block_construction(n, u)
        return res, res.verdict is Verdict.SATURATED
    if fam == "s-bracket":
        res = C.s_bracket(n, u)
        return res, res.report.semisaturated
    res = C.infinite_analogue(n, u)
    return res, bool(res.details["middle_blocked"])


def cmd_construct(args) -> int:
    if args.family == "abcacbc" and args.n is None:
        raise SeqSatError("family abcacbc needs --n")
    if args.family == "alternation" and args.n is None:
        raise SeqSatError("family alternation needs --n")
    res, claim_holds = _construct(args)
    report = res.to_dict()
    report.update(command="construct", claim_holds=claim_holds)
    if args.format == "json":
        report["seq"] = list(res.seq)
        _write(args.output, to_json(report))
    else:
        _write(args.output, format_seq(res.seq) + "\n" + to_json(report))
    return OK if claim_holds else FAIL


def cmd_exact(args) -> int:
    res = sat_exact(args.n, args.pattern, engine=args.engine, N=args.N,
                    max_nodes=args.max_nodes, time_limit=args.time_limit)
    _write(args.output, to_json({"command": "exact", **res.to_dict(timing=not args.no_timing)}))
    return OK


def cmd_scan(args) -> int:
    result = scan(args.pattern, args.n_max, threads=args.threads)
    _write(args.csv, result.to_csv())
    if args.svg:
        seq = greedy_saturate(args.n_max, args.pattern)
        Path(args.svg).write_text(scatter_svg(seq, f"greedy {args.pattern} n={args.n_max}"))
    if args.csv not in (None, "-"):
        p = result.periodicity
        print(to_json({
            "command": "scan", "pattern": str(args.pattern), "n_max": args.n_max,
            "periodicity": None if p is None else {
                "period": p.period, "start_n": p.start_n, "values": list(p.values)},
        }), end="")
    return OK


def cmd_lp_export(args) -> int:
    N = args.N
    if N is None:
        N = len(greedy_saturate(args.n, args.pattern)) + 1
    _write(args.output, export_lp(build_ilp(args.n, N, args.pattern, args.pairing)))
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="seqsat", description="Saturation of forbidden sequence patterns.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="classify a sequence against a pattern")
    p.add_argument("seq")
    p.add_argument("--pattern", "-u", type=_pattern, required=True)
    p.add_argument("--n", type=_positive, help="alphabet size (default: largest letter)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("contains", help="look for a copy of the pattern")
    p.add_argument("seq")
    p.add_argument("--pattern", "-u", type=_pattern, required=True)
    p.add_argument("--through", type=_positive, help="1-based position the copy must use")
    p.set_defaults(func=cmd_contains)

    p = sub.add_parser("greedy", help="greedy saturated sequence")
    p.add_argument("--pattern", "-u", type=_pattern, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--svg")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_greedy)

    p = sub.add_parser("construct", help="explicit constructions")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--pattern", "-u", type=_pattern)
    p.add_argument("--n", type=_positive)
    p.add_argument("--t", type=_positive, default=2)
    p.add_argument("--variant", choices=("plain", "plus_a", "plus_ab"), default="plain")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("exact", help="exact Sat(n, u)")
    p.add_argument("--pattern", "-u", type=_pattern, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--engine", choices=ENGINES, default="both")
    p.add_argument("--N", type=_positive, help="grid width (default: greedy length + 1)")
    p.add_argument("--max-nodes", type=_positive)
    p.add_argument("--time-limit", type=float)
    p.add_argument("--no-timing", action="store_true", help="omit elapsed_ms")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("scan", help="greedy lengths for a range of n")
    p.add_argument("--pattern", "-u", type=_pattern, required=True)
    p.add_argument("--n-max", type=_positive, required=True)
    p.add_argument("--threads", type=_positive, default=1)
    p.add_argument("--csv", help="CSV destination (default: stdout)")
    p.add_argument("--svg", help="scatter of the greedy sequence at n-max")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("lp-export", help="write the integer program in LP format")
    p.add_argument("--pattern", "-u", type=_pattern, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--N", type=_positive)
    p.add_argument("--pairing", choices=("reading", "swapped"), default="reading")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_lp_export)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        sys.stderr.write(to_json({"error": {"type": type(exc).__name__, "message": str(exc)}}))
        return USAGE
    except SeqSatError as exc:
        sys.stderr.write(to_json({"error": {"type": type(exc).__name__, "message": str(exc)}}))
        return FAIL


if __name__ == "__main__":
    sys.exit(main())
