"""Command-line front end.

Exit codes: 0 ok, 1 internal error, 2 input error, 3 budget refusal,
4 unknown target.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .cache import ResultCache, cache_key
from .errors import BudgetExceeded, InvalidIdeal, UnknownTarget
from .monomials import (
    MonomialIdeal,
    canonical_form,
    ideal_from_json,
    ideal_to_json_dict,
    parse_inline_ideal,
)
from .report import ALL_CHECKS, analyze
from .reproduce import run_all, run_target, target_names
from .survey import DEFAULT_BUDGET, enumerate_ideals, survey_row

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_UNKNOWN_TARGET = 4


def _read_ideal(spec: str) -> MonomialIdeal:
    if spec == "-":
        return ideal_from_json(sys.stdin.read())
    if spec.startswith("@"):
        return ideal_from_json(Path(spec[1:]).read_text())
    if spec.strip().startswith("{"):
        return ideal_from_json(spec)
    return parse_inline_ideal(spec)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _cmd_analyze(args) -> int:
    ideal = _read_ideal(args.ideal)
    checks = tuple(c.strip() for c in args.checks.split(",")) if args.checks else ALL_CHECKS
    cache = ResultCache()
    key = cache_key(
        "analyze",
        __version__,
        {"ideal": ideal_to_json_dict(canonical_form(ideal)), "checks": sorted(checks)},
    )
    report = analyze(ideal, checks)
    data = report.to_json_dict(include_timing=args.timings)
    if cache.enabled and cache.lookup("analyze", key) is None:
        cache.append("analyze", key, report.to_json_dict())
    if args.figure:
        from .figures import render_polygon

        render_polygon(ideal, args.figure)
    if args.format == "text":
        _emit(report.text_summary(), args.out)
    else:
        _emit(json.dumps(data, indent=2, sort_keys=True), args.out)
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    filters = tuple(f.strip() for f in args.filter.split(",") if f.strip()) if args.filter else ()
    extra = args.mu - (args.n + 1)
    if extra < 0:
        raise InvalidIdeal("malformed", f"mu must be at least n+1 = {args.n + 1}")
    progress = sys.stderr if args.progress else None
    if args.survey:
        row = survey_row(
            args.n, args.d, args.mu, budget=args.budget, workers=args.threads,
            progress=progress,
        )
        if args.format == "json":
            out = {
                "n": row.n, "d": row.d, "mu": row.mu, "total": row.total,
                "togliatti": row.togliatti, "minimal": row.minimal,
                "minimal_smooth": row.minimal_smooth, "trivial": row.trivial,
                "trivial_type_b": row.trivial_type_b,
                "representatives": {
                    k: [ideal_to_json_dict(i) for i in v]
                    for k, v in sorted(row.representatives.items())
                },
            }
            _emit(json.dumps(out, indent=2, sort_keys=True), args.out)
        else:
            _emit(row.CSV_HEADER + "\n" + row.csv_line() + "\n", args.out)
        return EXIT_OK
    stream = enumerate_ideals(
        args.n, args.d, extra,
        filters=filters,
        up_to_symmetry=args.up_to_symmetry,
        budget=args.budget,
        workers=args.threads,
        progress=progress,
    )
    lines = []
    if args.format == "csv":
        lines.append("n,d,mu,generators")
        for ideal in stream:
            lines.append(f'{ideal.n},{ideal.d},{ideal.r},"{ideal}"')
    elif args.format == "json":
        for ideal in stream:
            lines.append(json.dumps(ideal_to_json_dict(ideal), sort_keys=True))
    else:
        for ideal in stream:
            lines.append(str(ideal))
    _emit("\n".join(lines) + ("\n" if lines else ""), args.out)
    return EXIT_OK


def _cmd_reproduce(args) -> int:
    cache = ResultCache()
    if args.list:
        _emit("\n".join(target_names()), args.out)
        return EXIT_OK
    if args.all:
        results = list(run_all(workers=args.threads, cache=cache))
    else:
        if not args.target:
            raise InvalidIdeal("malformed", "give a target name or --all")
        results = [run_target(args.target, workers=args.threads, cache=cache)]
    if args.format == "json":
        _emit(
            json.dumps([r.to_json_dict() for r in results], indent=2, sort_keys=True),
            args.out,
        )
    else:
        lines = []
        for r in results:
            lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.name}  ({r.elapsed_s:.2f}s)")
            if args.verbose or not r.passed:
                lines.extend("    " + d for d in r.details)
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="togliatti",
        description="Analyze and classify Togliatti systems of monomial ideals.",
    )
    parser.add_argument("--version", action="version", version=f"togliatti {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="analyze one ideal")
    pa.add_argument(
        "ideal",
        help='inline monomials ("x0^5,x1^5,x2^5,x0^3*x1*x2"), JSON, @file, or - for stdin',
    )
    pa.add_argument("--checks", default=None, help="comma list from: wlp,togliatti,smoothness,stability")
    pa.add_argument("--format", choices=("json", "text"), default="json")
    pa.add_argument("--out", default=None)
    pa.add_argument("--figure", default=None, help="write the n=2 lattice picture (svg or png)")
    pa.add_argument("--timings", action="store_true", help="include timing (non-deterministic) in JSON")
    pa.set_defaults(func=_cmd_analyze)

    pe = sub.add_parser("enumerate", help="enumerate ideals up to symmetry")
    pe.add_argument("--n", type=int, required=True)
    pe.add_argument("--d", type=int, required=True)
    pe.add_argument("--mu", type=int, required=True, help="total generator count (pure powers included)")
    pe.add_argument("--filter", default="", help="comma list from: togliatti,minimal,smooth,trivial,nontrivial")
    pe.add_argument("--format", choices=("json", "csv", "text"), default="csv")
    pe.add_argument("--out", default=None)
    pe.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    pe.add_argument("--threads", type=int, default=1)
    pe.add_argument("--up-to-symmetry", dest="up_to_symmetry", action="store_true", default=True)
    pe.add_argument("--no-up-to-symmetry", dest="up_to_symmetry", action="store_false")
    pe.add_argument("--survey", action="store_true", help="emit one summary row instead of the stream")
    pe.add_argument("--progress", action="store_true", help="progress notes on stderr")
    pe.set_defaults(func=_cmd_enumerate)

    pr = sub.add_parser("reproduce", help="re-derive published classifications")
    pr.add_argument("target", nargs="?", default=None)
    pr.add_argument("--all", action="store_true")
    pr.add_argument("--list", action="store_true", help="list registered targets")
    pr.add_argument("--format", choices=("json", "text"), default="text")
    pr.add_argument("--out", default=None)
    pr.add_argument("--threads", type=int, default=1)
    pr.add_argument("--verbose", action="store_true")
    pr.set_defaults(func=_cmd_reproduce)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidIdeal as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget refusal: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except UnknownTarget as exc:
        print(f"unknown target: {exc.target}", file=sys.stderr)
        print("valid targets:", file=sys.stderr)
        for name in exc.valid:
            print(f"  {name}", file=sys.stderr)
        return EXIT_UNKNOWN_TARGET
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
