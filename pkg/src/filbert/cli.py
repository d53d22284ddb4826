"""Command-line interface.

    filbert matrix --family filbert --alpha 2 --n 1 --inverse
    filbert poly --family jacobi01 --alpha 1/2 --n 3
    filbert verify --suite all --alpha-max 4 --n-max 8

Every number is emitted as an exact integer or ``p/q`` string. Exit code 2
means bad arguments, 1 means a closed form disagreed with its oracle.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import fib_hankel, hilbert, linalg, verify

FORMATS = ("json", "csv", "plain")


def parse_alpha(text: str) -> Fraction:
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an integer or p/q rational: {text!r}")
    if value <= 0:
        raise argparse.ArgumentTypeError(f"alpha must be positive, got {text!r}")
    return value


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {value}")
    return value


def exact(x) -> str:
    return str(Fraction(x)) if not isinstance(x, int) else str(x)


def exact_matrix(m) -> list[list[str]]:
    return [[exact(v) for v in row] for row in m]


def document(family, alpha, n, kind, payload, status="ok") -> dict:
    return {
        "family": family,
        "alpha": exact(alpha) if alpha is not None else None,
        "n": n,
        "kind": kind,
        "payload": payload,
        "status": status,
    }


def dumps(doc: dict) -> str:
    """Canonical JSON text: sorted keys, fixed indentation, no floats."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# --- rendering ---------------------------------------------------------------


def _payload_tables(doc: dict) -> list[tuple[str | None, list[list[str]]]]:
    """Flatten a payload into titled tables of strings for csv/plain output."""
    p, kind = doc["payload"], doc["kind"]
    if kind == "verify-report":
        rows = [["check", "cells", "failed", "status", "alpha", "n", "detail"]]
        for c in p["checks"]:
            ce = c["first_counterexample"] or {}
            rows.append([c["name"], str(c["cells"]), str(c["failed"]), c["status"],
                         ce.get("alpha", ""), str(ce.get("n", "")), ce.get("detail", "")])
        return [(None, rows)]

    def as_rows(value):
        if isinstance(value, list):
            return value if value and isinstance(value[0], list) else [value]
        return [[value]]

    if "oracle" in p:
        return [
            ("closed_form", as_rows(p["closed_form"])),
            ("oracle", as_rows(p["oracle"])),
            ("equal", [[str(p["equal"]).lower()]]),
        ]
    key = {"matrix": "entries", "inverse": "entries", "det": "value", "poly": "coefficients"}[kind]
    return [(None, as_rows(p[key]))]


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return dumps(doc)
    tables = _payload_tables(doc)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for title, rows in tables:
            if title is not None:
                w.writerow([title])
            w.writerows(rows)
        return buf.getvalue()
    lines = []
    for title, rows in tables:
        if title is not None:
            lines.append(f"{title}:")
        ncols = max((len(r) for r in rows), default=0)
        widths = [max((len(r[k]) for r in rows if k < len(r)), default=0) for k in range(ncols)]
        for r in rows:
            lines.append("  ".join(c.rjust(widths[k]) for k, c in enumerate(r)).rstrip())
    return "\n".join(lines) + "\n"


# --- commands ----------------------------------------------------------------


def _family_alpha(parser, family: str, alpha: Fraction):
    if family in ("filbert", "binom", "fib"):
        if alpha.denominator != 1:
            parser.error(f"--alpha must be a positive integer for family {family}")
        return int(alpha)
    return alpha if alpha.denominator != 1 else int(alpha)


def cmd_matrix(args, parser) -> tuple[dict, int]:
    family, n = args.family, args.n
    alpha = _family_alpha(parser, family, args.alpha)
    if args.inverse and args.det:
        parser.error("--inverse and --det are mutually exclusive")
    kind = "inverse" if args.inverse else "det" if args.det else "matrix"
    if args.oracle and kind == "matrix":
        parser.error("--oracle needs --inverse or --det")

    build = {
        "filbert": fib_hankel.filbert_matrix,
        "hilbert": hilbert.hilbert_matrix,
        "binom": hilbert.binom_hankel_matrix,
    }[family]
    m = build(alpha, n)
    if kind == "matrix":
        return document(family, alpha, n, kind, {"entries": exact_matrix(m)}), 0

    if kind == "inverse":
        closed_entry = {
            "filbert": fib_hankel.inverse_entry,
            "hilbert": hilbert.hilbert_inverse_entry,
            "binom": hilbert.binom_hankel_inverse_entry,
        }[family]
        closed = [[closed_entry(alpha, n, i, j) for j in range(n + 1)] for i in range(n + 1)]
        if not args.oracle:
            return document(family, alpha, n, kind, {"entries": exact_matrix(closed)}), 0
        oracle = linalg.invert(m)
        equal = [[Fraction(v) for v in row] for row in closed] == oracle
        payload = {"closed_form": exact_matrix(closed), "oracle": exact_matrix(oracle), "equal": equal}
    else:
        if family == "filbert":
            closed = fib_hankel.filbert_det_closed(alpha, n)
        elif family == "hilbert":
            closed = hilbert.hilbert_det_closed(alpha, n)
        else:
            closed = None  # no closed-form determinant for this family
        if not args.oracle:
            value = closed if closed is not None else linalg.det(m)
            return document(family, alpha, n, kind, {"value": exact(value)}), 0
        oracle = linalg.det(m)
        if closed is None:
            closed = oracle
        equal = closed == oracle
        payload = {"closed_form": exact(closed), "oracle": exact(oracle), "equal": equal}
    status = "ok" if equal else "mismatch"
    return document(family, alpha, n, kind, payload, status), 0 if equal else 1


def cmd_poly(args, parser) -> tuple[dict, int]:
    family, n = args.family, args.n
    alpha = _family_alpha(parser, family, args.alpha)
    build = {
        "fib": fib_hankel.fib_poly,
        "jacobi01": hilbert.jacobi01_poly,
        "jacobi01-shifted": hilbert.jacobi01_shifted_poly,
    }[family]
    p = build(alpha, n)
    return document(family, alpha, n, "poly", {"coefficients": [exact(c) for c in p]}), 0


def cmd_verify(args, parser) -> tuple[dict, int]:
    if args.tolerance <= 0:
        parser.error("--tolerance must be positive")
    report = verify.run(args.suite, args.alpha_max, args.n_max, args.tolerance, corrupt=args.corrupt)
    status = "ok" if report["passed"] else "mismatch"
    doc = document(args.suite, args.alpha_max, args.n_max, "verify-report", report, status)
    return doc, 0 if report["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="filbert",
        description="Exact closed-form inverses and determinants of Hankel matrices "
        "built from Fibonacci numbers and from 1/(alpha+n).",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="json")
    common.add_argument("--out", metavar="PATH", help="write the document here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matrix", parents=[common], help="matrix, inverse or determinant")
    p.add_argument("--family", choices=("filbert", "hilbert", "binom"), required=True)
    p.add_argument("--alpha", type=parse_alpha, required=True, help="integer or p/q")
    p.add_argument("--n", type=_nonneg, required=True, help="matrix order minus one")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--det", action="store_true")
    p.add_argument("--oracle", action="store_true",
                   help="also compute by fraction-free elimination and compare")
    p.set_defaults(handler=cmd_matrix)

    p = sub.add_parser("poly", parents=[common], help="orthogonal polynomial coefficients")
    p.add_argument("--family", choices=("fib", "jacobi01", "jacobi01-shifted"), required=True)
    p.add_argument("--alpha", type=parse_alpha, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.set_defaults(handler=cmd_poly)

    p = sub.add_parser("verify", parents=[common], help="run the verification suites")
    p.add_argument("--suite", choices=("all",) + verify.SUITES, default="all")
    p.add_argument("--alpha-max", type=_nonneg, default=4)
    p.add_argument("--n-max", type=_nonneg, default=8)
    p.add_argument("--tolerance", type=float, default=1e-10,
                   help="bound for the truncated numeric checks only")
    p.add_argument("--corrupt", choices=sorted(verify.CLOSED_FORMS), help=argparse.SUPPRESS)
    p.set_defaults(handler=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, code = args.handler(args, parser)
    except (ValueError, ArithmeticError) as exc:
        print(f"filbert: error: {exc}", file=sys.stderr)
        return 2
    text = render(doc, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
