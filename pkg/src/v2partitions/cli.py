"""Command-line front end: tables, verification runs, remark tableaux,
and comparison against locally supplied b-files.

Exit codes: 0 = success / all checks pass, 1 = mathematical mismatch,
2 = usage or input error. All numeric output is decimal strings; nothing
here ever touches floating point except the elapsed timing field, which
`--stable` zeroes for golden-file comparisons.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .families import BRUTE_LIMIT, Route, table
from .valuation import FamilyId
from .verify import remark_trace, verify_binary_identity, verify_family

FAMILY_TOKENS = [f.value for f in FamilyId]
ROUTE_TOKENS = [r.value for r in Route]

BINARY_IDENTITY_SWEEP = 50      # m <= 50 checked in every verify run
COMPARE_LIMIT = 10_000          # analytic routes refuse indices beyond this


@dataclass(frozen=True)
class BFileEntry:
    index: int
    value: int


def parse_bfile(path: str) -> list[BFileEntry]:
    """Parse an OEIS-style b-file: lines "<n> <value>", '#' comments, blanks ignored.

    Raises ValueError (with line number) on malformed or non-increasing lines.
    """
    entries: list[BFileEntry] = []
    with open(path, encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            if len(fields) != 2:
                raise ValueError(f"line {lineno}: expected '<n> <value>', got {line!r}")
            try:
                index, value = int(fields[0]), int(fields[1])
            except ValueError:
                raise ValueError(f"line {lineno}: non-integer field in {line!r}") from None
            if index < 0:
                raise ValueError(f"line {lineno}: negative index {index}")
            if entries and index <= entries[-1].index:
                raise ValueError(f"line {lineno}: index {index} not strictly increasing")
            entries.append(BFileEntry(index, value))
    return entries


def _emit_table(out, family: FamilyId, values: list[int], route: Route, fmt: str) -> None:
    if fmt == "csv":
        out.write("family,n,value,route\n")
        for n, value in enumerate(values):
            out.write(f"{family.value},{n},{value},{route.value}\n")
    else:
        for n, value in enumerate(values):
            record = {"family": family.value, "n": n, "value": str(value), "route": route.value}
            out.write(json.dumps(record) + "\n")


def cmd_table(args) -> int:
    family = FamilyId.from_token(args.family)
    route = Route.from_token(args.route)
    try:
        values = table(family, args.limit, route)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit_table(sys.stdout, family, values, route, args.format)
    return 0


def _report_dict(report, stable: bool) -> dict:
    d = {
        "subject": report.subject(),
        "order": report.order,
        "routes": list(report.routes_compared),
        "status": report.status,
        "elapsed_ms": 0.0 if stable else round(report.elapsed_ms, 3),
    }
    if report.first_mismatch is not None:
        n, values = report.first_mismatch
        d["first_mismatch"] = {"n": n, "values": {k: str(v) for k, v in values.items()}}
    return d


def _print_report(report, fmt: str, stable: bool) -> None:
    if fmt == "json":
        print(json.dumps(_report_dict(report, stable)))
        return
    elapsed = "-" if stable else f"{report.elapsed_ms:.1f}ms"
    line = f"{report.status}  {report.subject()}  order={report.order}  " \
           f"routes={','.join(report.routes_compared)}  elapsed={elapsed}"
    if report.first_mismatch is not None:
        n, values = report.first_mismatch
        detail = ", ".join(f"{k}={v}" for k, v in values.items())
        line += f"  first mismatch at n={n}: {detail}"
    print(line)


def cmd_verify(args) -> int:
    if args.families == "all":
        families = list(FamilyId)
    else:
        try:
            families = [FamilyId.from_token(tok) for tok in args.families.split(",")]
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    if args.brute and args.limit > BRUTE_LIMIT:
        print(f"error: --brute requires --limit <= {BRUTE_LIMIT}", file=sys.stderr)
        return 2
    all_pass = True
    for family in families:
        report = verify_family(family, args.limit, include_brute=args.brute)
        _print_report(report, args.format, args.stable)
        all_pass &= report.passed
    for m in range(1, BINARY_IDENTITY_SWEEP + 1):
        report = verify_binary_identity(m, args.limit)
        if not report.passed:
            _print_report(report, args.format, args.stable)
            all_pass = False
    if all_pass:
        if args.format == "json":
            print(json.dumps({"subject": f"binary-identity m<={BINARY_IDENTITY_SWEEP}",
                              "order": args.limit, "status": "PASS"}))
        else:
            print(f"PASS  binary-identity m<={BINARY_IDENTITY_SWEEP}  order={args.limit}")
    return 0 if all_pass else 1


def cmd_remark(args) -> int:
    family = FamilyId.from_token(args.family)
    if args.n < 1 or args.n > BRUTE_LIMIT:
        print(f"error: --n must be between 1 and {BRUTE_LIMIT}", file=sys.stderr)
        return 2
    trace = remark_trace(family, args.n)
    for partition, term in trace.lines:
        parts = "+".join(str(p) for p in partition.parts())
        print(f"{parts}  {term} = {partition.weight}")
    print(f"total = {trace.total}")
    return 0


def cmd_compare(args) -> int:
    family = FamilyId.from_token(args.family)
    route = Route.from_token(args.route)
    try:
        entries = parse_bfile(args.bfile)
    except OSError as exc:
        print(f"error: cannot read {args.bfile}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {args.bfile}: {exc}", file=sys.stderr)
        return 2
    limit = BRUTE_LIMIT if route is Route.BRUTE else COMPARE_LIMIT
    comparable = [e for e in entries if e.index <= limit]
    skipped = [e for e in entries if e.index > limit]
    mismatches = 0
    if comparable:
        values = table(family, comparable[-1].index, route)
        for entry in comparable:
            computed = values[entry.index]
            if computed == entry.value:
                print(f"{entry.index}: MATCH {entry.value}")
            else:
                print(f"{entry.index}: MISMATCH file={entry.value} computed={computed}")
                mismatches += 1
    for entry in skipped:
        print(f"{entry.index}: SKIPPED (beyond {route.value} route limit {limit})")
    print(f"summary: {len(comparable)} compared, {mismatches} mismatched, {len(skipped)} skipped")
    return 1 if mismatches else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="v2partitions",
        description="Restricted partition functions via 2-adic valuation exponents")
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="print f(0..N) for one family and route")
    p_table.add_argument("--family", required=True, choices=FAMILY_TOKENS)
    p_table.add_argument("--limit", type=int, required=True, metavar="N")
    p_table.add_argument("--route", default="gf", choices=ROUTE_TOKENS)
    p_table.add_argument("--format", default="csv", choices=["csv", "json"])
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="cross-route verification reports")
    p_verify.add_argument("--families", default="all",
                          help="comma-separated family tokens, or 'all'")
    p_verify.add_argument("--limit", type=int, required=True, metavar="N")
    p_verify.add_argument("--brute", action="store_true",
                          help="include the brute-force oracle (limit <= 60)")
    p_verify.add_argument("--format", default="text", choices=["text", "json"])
    p_verify.add_argument("--stable", action="store_true",
                          help="freeze timing fields for golden-file comparison")
    p_verify.set_defaults(func=cmd_verify)

    p_remark = sub.add_parser("remark", help="capped-partition tableau with binomial weights")
    p_remark.add_argument("--family", required=True, choices=FAMILY_TOKENS)
    p_remark.add_argument("--n", type=int, required=True)
    p_remark.set_defaults(func=cmd_remark)

    p_compare = sub.add_parser("compare", help="compare a family against a b-file")
    p_compare.add_argument("--family", required=True, choices=FAMILY_TOKENS)
    p_compare.add_argument("--bfile", required=True)
    p_compare.add_argument("--route", default="gf", choices=ROUTE_TOKENS)
    p_compare.set_defaults(func=cmd_compare)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entrypoint() -> None:
    sys.exit(main())
