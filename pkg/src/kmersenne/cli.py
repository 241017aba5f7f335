"""Command-line front end.

Subcommands: ``table``, ``seq``, ``verify``, ``series``, ``bench``.
Exit codes: 0 success, 1 identity failure or mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from contextlib import redirect_stdout

from . import identities as ids
from . import sequences as seq
from .identities import IdentityReport, SuiteConfig
from .render import encode_value, format_value, value_record
from .sequences import Family

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

TABLE_FAMILIES = {1: Family.M, 2: Family.MP, 3: Family.GM, 4: Family.GMP}

#: (table, n, k) -> value as printed in the published tables, where the
#: printed value disagrees with the product relation
ERRATA = {
    (3, 3, 5): "-i/4",
    (4, 3, 5): "-i/4",
    (4, 5, 2): "(27x^3-3x^2-6x)+i(18x^2-2)",
}


class UsageError(Exception):
    pass


def _positive(name: str, value: int | None) -> None:
    if value is not None and value < 1:
        raise UsageError(f"{name} must be at least 1, got {value}")


# -- table ------------------------------------------------------------------


def cmd_table(args) -> int:
    tid = args.table_id
    n_max = 5 if args.n_max is None else args.n_max
    k_max = 5 if args.k_max is None else args.k_max
    if n_max < 0:
        raise UsageError(f"--n-max must be non-negative for tables, got {n_max}")
    _positive("--k-max", k_max)
    family = TABLE_FAMILIES[tid]
    ks = range(1, k_max + 1)
    columns = {k: list(seq.seq_stream(family, n_max + 1, k)) for k in ks}
    rows = [[columns[k][n] for k in ks] for n in range(n_max + 1)]
    flagged = [(n, k) for n in range(n_max + 1) for k in ks if (tid, n, k) in ERRATA]

    if args.format == "json":
        records = []
        for n, row in enumerate(rows):
            for k, v in zip(ks, row):
                rec = value_record(family, n, k, v)
                if (tid, n, k) in ERRATA:
                    rec["erratum"] = {"printed": ERRATA[tid, n, k]}
                records.append(rec)
        print(json.dumps({"table": tid, "cells": records}, indent=2))
        return EXIT_OK

    def cell(n, k, v):
        return format_value(v) + ("*" if (tid, n, k) in ERRATA else "")

    header = ["n"] + [f"k={k}" for k in ks]
    body = [[str(n)] + [cell(n, k, v) for k, v in zip(ks, row)] for n, row in enumerate(rows)]
    notes = [
        f"* n={n}, k={k}: published table prints {ERRATA[tid, n, k]}; "
        f"shown value follows the product relation"
        for n, k in flagged
    ]
    if args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(header)
        w.writerows(body)
        for note in notes:
            print("# " + note)
        return EXIT_OK
    widths = [max(len(r[j]) for r in [header] + body) for j in range(len(header))]
    for r in [header] + body:
        print("  ".join(c.rjust(wd) for c, wd in zip(r, widths)).rstrip())
    for note in notes:
        print(note)
    return EXIT_OK


# -- seq --------------------------------------------------------------------


def cmd_seq(args) -> int:
    family = Family(args.family)
    if args.n < 0:
        raise UsageError(f"n must be non-negative, got {args.n}")
    _positive("--k", args.k)
    try:
        if args.range:
            items = list(enumerate(seq.seq_stream(family, args.n + 1, args.k)))
        else:
            items = [(args.n, seq.term(family, args.n, args.k))]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    if args.format == "json":
        recs = [value_record(family, n, args.k, v) for n, v in items]
        print(json.dumps(recs if args.range else recs[0], indent=2))
    elif args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["family", "n", "k", "value"])
        for n, v in items:
            w.writerow([family.value, n, args.k, format_value(v)])
    elif args.range:
        for n, v in items:
            print(n, format_value(v))
    else:
        print(format_value(items[0][1]))
    return EXIT_OK


# -- verify -----------------------------------------------------------------


def _report_dict(r: IdentityReport) -> dict:
    return {
        "identity": r.identity_name,
        "parameters": dict(r.parameters),
        "orientation": r.orientation,
        "lhs": encode_value(r.lhs),
        "rhs": encode_value(r.rhs),
        "holds": r.holds,
    }


def _describe(r: IdentityReport) -> str:
    params = ", ".join(f"{k}={v}" for k, v in r.parameters)
    return (f"{r.identity_name}({params}): lhs={format_value(r.lhs)} "
            f"rhs={format_value(r.rhs)} residual={format_value(r.residual)}")


def cmd_verify(args) -> int:
    names = list(ids.SUITES) if args.suite == "all" else [args.suite]
    _positive("--n-max", args.n_max)
    _positive("--k-max", args.k_max)
    families = tuple(Family(f) for f in args.family) if args.family else ids.ALL_FAMILIES
    cfg = SuiteConfig(n_max=args.n_max, k_max=args.k_max, families=families)

    groups: list[tuple[str, list[IdentityReport]]] = []
    for name in names:
        by_family: dict[str, list[IdentityReport]] = {}
        for r in ids.run_suite(name, cfg):
            by_family.setdefault(r.params.get("family", "GM"), []).append(r)
        for fam, reports in by_family.items():
            groups.append((f"{name}[{fam}]", reports))

    first_fail = next((r for _, rs in groups for r in rs if not r.holds), None)
    ok = first_fail is None

    if args.format == "json":
        out = {
            "ok": ok,
            "suites": [
                {"suite": label, "total": len(rs), "passed": sum(r.holds for r in rs)}
                for label, rs in groups
            ],
            "first_failure": _report_dict(first_fail) if first_fail else None,
        }
        if args.cells:
            out["cells"] = [_report_dict(r) for _, rs in groups for r in rs]
        print(json.dumps(out, indent=2))
    elif args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        if args.cells:
            w.writerow(["suite", "parameters", "holds", "lhs", "rhs"])
            for label, rs in groups:
                for r in rs:
                    params = ";".join(f"{k}={v}" for k, v in r.parameters)
                    w.writerow([label, params, r.holds, format_value(r.lhs), format_value(r.rhs)])
        else:
            w.writerow(["suite", "passed", "total"])
            for label, rs in groups:
                w.writerow([label, sum(r.holds for r in rs), len(rs)])
    else:
        for label, rs in groups:
            if args.cells:
                for r in rs:
                    print(("PASS " if r.holds else "FAIL ") + _describe(r))
            passed = sum(r.holds for r in rs)
            print(f"{label}: {passed}/{len(rs)} pass")
        if first_fail is not None:
            print("first failure: " + _describe(first_fail))
    return EXIT_OK if ok else EXIT_FAIL


# -- series -----------------------------------------------------------------


def cmd_series(args) -> int:
    if args.count < 1:
        raise UsageError(f"count must be at least 1, got {args.count}")
    family = Family(args.family)
    series = ids.expand_rational_series(*ids.generating_function(family), args.count)
    terms = list(seq.seq_stream(family, args.count))
    match = list(series.coefficients) == [seq.GaussianDyadic.coerce(t) for t in terms]
    coeffs = series.coefficients
    if family is Family.M:
        coeffs = tuple(c.re_num if c.is_integer() else c for c in coeffs)
    if args.format == "json":
        print(json.dumps({
            "family": family.value,
            "count": args.count,
            "coefficients": [encode_value(c) for c in coeffs],
            "match": match,
        }, indent=2))
    elif args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["j", "coefficient", "sequence"])
        for j, (c, t) in enumerate(zip(coeffs, terms)):
            w.writerow([j, format_value(c), format_value(t)])
    else:
        sep = " " if family is Family.M else ", "
        print(sep.join(format_value(c) for c in coeffs) + (" (match)" if match else " (MISMATCH)"))
    return EXIT_OK if match else EXIT_FAIL


# -- bench ------------------------------------------------------------------


def _timed(fn, n):
    t0 = time.perf_counter()
    v = fn(n)
    return v, time.perf_counter() - t0


def cmd_bench(args) -> int:
    if not args.n_values:
        raise UsageError("bench needs at least one n")
    if any(n < 0 for n in args.n_values):
        raise UsageError("bench indices must be non-negative")
    rows, ok = [], True
    for n in args.n_values:
        fast, t_fast = _timed(seq.mersenne, n)
        # bit pattern check is independent of both code paths
        all_ones = fast.bit_length() == n and (fast + 1) & fast == 0
        if n <= args.oracle_cutoff:
            slow, t_slow = _timed(seq.mersenne_oracle, n)
            equal = slow == fast
        else:
            t_slow, equal = None, None
        ok &= all_ones and equal is not False
        rows.append({"n": n, "bits": fast.bit_length(), "closed_form_s": t_fast,
                     "oracle_s": t_slow, "equal": equal, "all_ones": all_ones})
    if args.format == "json":
        print(json.dumps({"ok": ok, "rows": rows}, indent=2))
    elif args.format == "csv":
        w = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    else:
        print(f"{'n':>10} {'bits':>10} {'closed form (s)':>16} {'oracle (s)':>12}  result")
        for r in rows:
            oracle = "skipped" if r["oracle_s"] is None else f"{r['oracle_s']:.6f}"
            if r["equal"] is None:
                verdict = "bits ok" if r["all_ones"] else "BAD BITS"
            else:
                verdict = "equal" if r["equal"] and r["all_ones"] else "MISMATCH"
            print(f"{r['n']:>10} {r['bits']:>10} {r['closed_form_s']:>16.6f} {oracle:>12}  {verdict}")
    return EXIT_OK if ok else EXIT_FAIL


# -- parser -----------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=["plain", "csv", "json"], default=d("plain"))
    p.add_argument("--n-max", type=int, default=d(None), help="upper index bound")
    p.add_argument("--k-max", type=int, default=d(None), help="upper k bound")
    p.add_argument("--out", default=d(None), help="write output to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kmersenne",
        description="Exact Mersenne-family sequences and identity verification.",
    )
    _add_common(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)
    families = [f.value for f in Family]

    p = sub.add_parser("table", parents=[common], help="regenerate tables 1-4")
    p.add_argument("table_id", type=int, choices=sorted(TABLE_FAMILIES))
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("seq", parents=[common], help="print a term or a prefix")
    p.add_argument("family", choices=families)
    p.add_argument("n", type=int)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--range", action="store_true", help="print terms 0..n")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("verify", parents=[common], help="run identity suites")
    p.add_argument("suite", choices=list(ids.SUITES) + ["all"])
    p.add_argument("--family", action="append", choices=families,
                   help="restrict to a family (repeatable)")
    p.add_argument("--cells", action="store_true", help="report every grid cell")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("series", parents=[common], help="expand a generating function")
    p.add_argument("family", choices=["M", "GM"])
    p.add_argument("count", type=int)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("bench", parents=[common], help="closed form vs recurrence timing")
    p.add_argument("n_values", type=int, nargs="+")
    p.add_argument("--oracle-cutoff", type=int, default=200_000,
                   help="skip the linear recurrence above this n")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    buf = io.StringIO()
    try:
        with redirect_stdout(buf):
            code = args.func(args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = buf.getvalue()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
