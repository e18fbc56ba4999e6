"""Command-line front end.

Exit codes: 0 on success (``member``: n is a member), 2 when ``member`` finds a
non-member or ``verify-paper`` has a failing check, 1 on usage or input errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from typing import Optional, Sequence

from . import acceptance
from .cache import cached_scan
from .core import (
    INT64_MAX,
    ConstraintProfile,
    GeneratorPair,
    enumerate_decompositions,
    explain,
    first_violation,
    is_member,
)
from .sieve import DEFAULT_BOUND, class_maxima, gaps_in, probe_powers
from .table import LIST_THRESHOLD, emit_table, render
from .theorems import certify

EXIT_OK, EXIT_USAGE, EXIT_NEGATIVE = 0, 1, 2
BANNER = "note: scan covers [0, {bound}] only; anything larger is empirical beyond theorems"

log = logging.getLogger("semigap")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {v}")
    if v > INT64_MAX:
        raise argparse.ArgumentTypeError(f"exceeds the 64-bit range: {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _gens(text: str) -> GeneratorPair:
    try:
        p, q = (int(x) for x in text.split(","))
        return GeneratorPair(p, q)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected P,Q with distinct positive integers: {exc}") from None


def _interval(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None
    return lo, hi


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("instance")
    g.add_argument("--gens", type=_gens, default=GeneratorPair(10, 11), metavar="P,Q",
                   help="generators (default 10,11)")
    g.add_argument("--a-min", type=_nonneg, default=0)
    g.add_argument("--a-max", type=_nonneg, default=None)
    g.add_argument("--alpha", type=_nonneg, default=2)
    g.add_argument("--beta", type=int, default=1)
    g.add_argument("--no-coprime", action="store_true", help="drop the gcd(a,b)=1 condition")
    o = common.add_argument_group("output")
    o.add_argument("--bound", type=_positive, default=DEFAULT_BOUND)
    o.add_argument("--format", choices=["md", "csv", "json"], default="md")
    o.add_argument("--cache", default=None, metavar="PATH", help="scan cache file")
    o.add_argument("--jobs", type=_positive, default=None, help="scan workers (default: all cores)")
    o.add_argument("-v", "--verbose", action="store_true")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="semigap", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("member", parents=[common], help="decide membership of N")
    p.add_argument("n", type=_nonneg)
    p = sub.add_parser("certify", parents=[common], help="certificate for N from the constructive rules")
    p.add_argument("n", type=_positive)
    sub.add_parser("scan", parents=[common], help="scan summary")
    p = sub.add_parser("gaps", parents=[common], help="gaps in an interval")
    p.add_argument("--from", dest="lo", type=_positive, default=1)
    p.add_argument("--to", dest="hi", type=_positive, default=None)
    sub.add_parser("classes", parents=[common], help="largest gap per residue class")
    p = sub.add_parser("table", parents=[common], help="interval table of members")
    p.add_argument("--interval", type=_interval, action="append", metavar="LO:HI",
                   help="repeatable; default is the published interval layout")
    p.add_argument("--threshold", type=_nonneg, default=LIST_THRESHOLD,
                   help="intervals ending at or below this are listed explicitly")
    p = sub.add_parser("probe", parents=[common], help="exponents e with base**e a non-member")
    p.add_argument("--base", type=int, default=2)
    p.add_argument("--limit", type=_positive, default=24)
    sub.add_parser("verify-paper", parents=[common], help="run the reproduction checklist")
    return parser


def _profile(args) -> ConstraintProfile:
    try:
        return ConstraintProfile(a_min=args.a_min, a_max=args.a_max, alpha=args.alpha,
                                 beta=args.beta, require_coprime=not args.no_coprime)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _report(args, profile):
    report = cached_scan(args.cache, args.gens, profile, args.bound, jobs=args.jobs)
    print(BANNER.format(bound=report.bound), file=sys.stderr)
    return report


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_member(args, out) -> int:
    profile = _profile(args)
    res = is_member(args.n, args.gens, profile)
    if args.format == "json":
        out.write(_dump(member_json(res)))
    elif args.format == "csv":
        rows = [(res.n, res.status.value, d.a, d.b, "PASS" if d == res.witness else str(v))
                for d, v in _annotated(res, args.gens, profile)]
        out.write(_csv(["n", "status", "a", "b", "check"], rows))
    else:
        out.write(explain(args.n, args.gens, profile) + "\n")
    return EXIT_OK if res.member else EXIT_NEGATIVE


def _annotated(res, gens, profile):
    return [(d, first_violation(d, profile)) for d in enumerate_decompositions(res.n, gens)]


def member_json(res) -> dict:
    return {
        "n": res.n,
        "status": res.status.value,
        "witness": None if res.witness is None else {"a": res.witness.a, "b": res.witness.b},
        "rejected": [{"a": d.a, "b": d.b, "constraint": v.constraint.value, "detail": v.detail}
                     for d, v in res.rejected],
    }


def cmd_certify(args, out) -> int:
    verdict = certify(args.n)
    if args.format == "json":
        out.write(_dump(verdict.to_dict()))
    elif args.format == "csv":
        d = verdict.to_dict()
        out.write(_csv(list(d), [list(d.values())]))
    else:
        out.write(" ".join(f"{k}={v}" for k, v in verdict.to_dict().items()) + "\n")
    return EXIT_OK


def scan_json(report) -> dict:
    return {
        "gens": [report.gens.p, report.gens.q],
        "profile": {"a_min": report.profile.a_min, "a_max": report.profile.a_max,
                    "alpha": report.profile.alpha, "beta": report.profile.beta,
                    "require_coprime": report.profile.require_coprime},
        "bound": report.bound,
        "gap_count": len(report.gaps),
        "max_gap": report.max_gap,
        "gaps": list(report.gaps),
        "certified_beyond": report.certified_beyond,
    }


def cmd_scan(args, out) -> int:
    report = _report(args, _profile(args))
    if args.format == "json":
        out.write(_dump(scan_json(report)))
    elif args.format == "csv":
        out.write(_csv(["gap"], [[g] for g in report.gaps]))
    else:
        out.write(f"instance {report.gens}, bound {report.bound}\n"
                  f"gaps: {len(report.gaps)}, max gap: {report.max_gap}\n"
                  + " ".join(map(str, report.gaps)) + "\n")
    return EXIT_OK


def cmd_gaps(args, out) -> int:
    report = _report(args, _profile(args))
    hi = report.bound if args.hi is None else args.hi
    gaps = gaps_in(report, args.lo, hi)
    if args.format == "json":
        out.write(_dump({"lo": args.lo, "hi": hi, "gaps": gaps}))
    elif args.format == "csv":
        out.write(_csv(["gap"], [[g] for g in gaps]))
    else:
        out.write(" ".join(map(str, gaps)) + "\n")
    return EXIT_OK


def cmd_classes(args, out) -> int:
    report = _report(args, _profile(args))
    maxima = class_maxima(report)
    if args.format == "json":
        out.write(_dump({"bound": report.bound, "classes": {str(k): v for k, v in maxima.items()}}))
    elif args.format == "csv":
        out.write(_csv(["class", "max_gap"], [[str(k), "" if v is None else v] for k, v in maxima.items()]))
    else:
        lines = ["| Class | Max gap |", "|---|---|"]
        lines += [f"| {k} | {'none' if v is None else v} |" for k, v in maxima.items()]
        out.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_table(args, out) -> int:
    report = _report(args, _profile(args))
    intervals = args.interval or [(r.lo, r.hi) for r in acceptance.published_rows(report.bound)]
    rows = emit_table(report, intervals, list_threshold=args.threshold)
    out.write(render(rows, args.format))
    return EXIT_OK


def cmd_probe(args, out) -> int:
    exps = probe_powers(args.gens, _profile(args), args.base, args.limit)
    if args.format == "json":
        out.write(_dump({"base": args.base, "limit": args.limit, "exponents": exps}))
    elif args.format == "csv":
        out.write(_csv(["exponent", "value"], [[e, args.base**e] for e in exps]))
    else:
        out.write(" ".join(map(str, exps)) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    inst = acceptance.Instance(args.gens, _profile(args), args.bound, args.jobs)
    results = acceptance.run_all(inst, echo=lambda line: (out.write(line + "\n"), out.flush()))
    failed = sum(not r.passed for r in results)
    out.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return EXIT_OK if not failed else EXIT_NEGATIVE


COMMANDS = {
    "member": cmd_member,
    "certify": cmd_certify,
    "scan": cmd_scan,
    "gaps": cmd_gaps,
    "classes": cmd_classes,
    "table": cmd_table,
    "probe": cmd_probe,
    "verify-paper": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, ValueError, OverflowError) as exc:
        print(f"semigap {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
