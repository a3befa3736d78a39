"""Command-line front end: list and run identity checks, print sequences
and Hankel determinants.

Exit codes: 0 all checks passed, 1 some check failed, 2 usage error,
3 internal error (an exact division left a remainder somewhere it must not).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .hankel import RBuilder, det_bareiss, hankel_matrix, hankel_poly_det
from .identities import DEFAULT_SEED, REGISTRY, CheckReport, run_check
from .moments import SEQUENCE_NAMES, named_sequence
from .ring import InexactDivisionError


class _Out:
    """stdout plus an optional duplicate file."""

    def __init__(self, path: str | None):
        self._file = open(path, "w") if path else None

    def write(self, line: str):
        sys.stdout.write(line + "\n")
        if self._file:
            self._file.write(line + "\n")

    def close(self):
        if self._file:
            self._file.close()


class _UsageError(Exception):
    pass


def _parse_param(text: str | None):
    if text is None or text == "symbolic":
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise _UsageError(f"bad --param value {text!r}: expected 'symbolic' "
                          "or a rational like 1 or 2/3") from None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hankel-lab",
        description="Exact verification of Hankel determinant identities for "
                    "moment sequences of symmetric orthogonal polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="list registered checks")
    p_list.add_argument("--format", choices=("text", "json"), default="text")

    p_run = sub.add_parser("run", help="run checks by id (or 'all')")
    p_run.add_argument("ids", nargs="+", help="check ids, or 'all'")
    p_run.add_argument("--n-max", type=int, default=None)
    p_run.add_argument("--param", default="symbolic",
                       help="'symbolic' or a rational like 1 or 2/3")
    p_run.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_run.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_run.add_argument("--out", default=None, help="duplicate output to a file")

    p_seq = sub.add_parser("seq", help="print a named moment sequence")
    p_seq.add_argument("name",
                       help="one of %s, or from-t:<comma list>"
                            % ", ".join(SEQUENCE_NAMES))
    p_seq.add_argument("count", type=int)
    p_seq.add_argument("--param", default="symbolic")
    p_seq.add_argument("--out", default=None)

    p_det = sub.add_parser("det", help="print one Hankel determinant")
    p_det.add_argument("name")
    p_det.add_argument("n", type=int)
    p_det.add_argument("offset", type=int, choices=(0, 1, 2))
    p_det.add_argument("builder", choices=("none", "conv", "lin"))
    p_det.add_argument("--param", default="symbolic")
    p_det.add_argument("--out", default=None)
    return parser


def _report_rows(report: CheckReport) -> list[dict]:
    rows = []
    for r in report.results:
        row = {"check": report.check_id, "n": r.n, "pass": r.passed,
               "lhs": r.lhs if r.lhs is not None else "",
               "millis": r.millis}
        if not r.passed:
            row["rhs"] = r.rhs if r.rhs is not None else ""
        rows.append(row)
    return rows


def _emit_run(reports: list[CheckReport], fmt: str, out: _Out) -> None:
    rows = [row for rep in reports for row in _report_rows(rep)]
    if fmt == "json":
        out.write(json.dumps(rows, indent=2))
        return
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=("check", "n", "pass", "lhs",
                                                 "rhs", "millis"))
        writer.writeheader()
        for row in rows:
            writer.writerow({**{"rhs": ""}, **row})
        out.write(buf.getvalue().rstrip("\n"))
        return
    for row in rows:
        status = "PASS" if row["pass"] else "FAIL"
        line = f"{row['check']} n={row['n']} {status} ({row['millis']} ms)"
        if row["lhs"]:
            line += f": {row['lhs']}"
        out.write(line)
        if not row["pass"] and row.get("rhs"):
            out.write(f"    expected: {row['rhs']}")


def cmd_list(args) -> int:
    if args.format == "json":
        payload = [{"id": c.check_id, "equations": list(c.equations),
                    "default_n": c.default_n}
                   for c in REGISTRY.values()]
        print(json.dumps(payload, indent=2))
        return 0
    for c in REGISTRY.values():
        eqs = ", ".join(c.equations)
        print(f"{c.check_id:10s} {eqs:30s} n <= {c.default_n}  {c.title}")
    return 0


def cmd_run(args) -> int:
    ids = list(args.ids)
    if ids == ["all"]:
        ids = list(REGISTRY)
    unknown = [i for i in ids if i not in REGISTRY]
    if unknown:
        print(f"unknown check id(s): {', '.join(unknown)}", file=sys.stderr)
        return 2
    if args.n_max is not None and args.n_max < 0:
        print("--n-max must be >= 0", file=sys.stderr)
        return 2
    param = _parse_param(args.param)
    out = _Out(args.out)
    try:
        reports = [run_check(i, args.n_max, param, args.seed) for i in ids]
        _emit_run(reports, args.format, out)
    finally:
        out.close()
    return 0 if all(rep.passed for rep in reports) else 1


def cmd_seq(args) -> int:
    if args.count < 0:
        print("count must be >= 0", file=sys.stderr)
        return 2
    param = _parse_param(args.param)
    try:
        seq = named_sequence(args.name, param)
    except KeyError as exc:
        print(exc.args[0], file=sys.stderr)
        return 2
    values = [str(v) for v in seq.prefix(args.count)]
    sep = "; " if any(" " in v for v in values) else " "
    out = _Out(args.out)
    try:
        out.write(sep.join(values))
    finally:
        out.close()
    return 0


def cmd_det(args) -> int:
    if args.n < 0:
        print("n must be >= 0", file=sys.stderr)
        return 2
    param = _parse_param(args.param)
    try:
        seq = named_sequence(args.name, param)
    except KeyError as exc:
        print(exc.args[0], file=sys.stderr)
        return 2
    if args.builder == "none":
        value = det_bareiss(hankel_matrix(seq, args.n, args.offset))
    else:
        builder = RBuilder(args.builder, seq)
        value = hankel_poly_det(builder, args.n, args.offset)
    out = _Out(args.out)
    try:
        out.write(str(value))
    finally:
        out.close()
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.command == "list":
            return cmd_list(args)
        if args.command == "run":
            return cmd_run(args)
        if args.command == "seq":
            return cmd_seq(args)
        return cmd_det(args)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    except InexactDivisionError as exc:
        print(f"internal error (inexact division): {exc}", file=sys.stderr)
        return 3
    except BrokenPipeError:
        return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
