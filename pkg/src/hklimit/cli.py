"""Command-line interface.

Every command prints a single JSON record (or, for ``converge``, a CSV
table) on stdout; diagnostics go to stderr.  Exact values are rendered
as lowest-terms "num/den" strings (integers as plain decimal strings);
floating approximations appear only under the opt-in --decimal key and
are never fed back into any computation.

Exit codes: 0 success, 2 argument or domain error, 3 internal
consistency failure (two independent routes disagreed).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from .colength import (
    MAX_DIM,
    colength_bruteforce,
    colength_formula,
    frobenius_colength,
    sandwich_bounds,
)
from .errors import ConsistencyError
from .eulerian import eulerian_polynomial, zigzag_coefficient, zigzag_numbers
from .gaussian import I
from .limit import convergence_table, multiplicity_limit
from .primes import primes_in_range


def fmt(value) -> str:
    """Exact rendering: Fractions as num/den in lowest terms, ints as decimal."""
    return str(value)


def fmt_decimal(value) -> str:
    """12-significant-digit float approximation, clearly derived."""
    return f"{float(value):.12g}"


def int_list(text: str) -> list:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def emit(record: dict):
    print(json.dumps(record, indent=2))


def cmd_limit(args) -> int:
    result = multiplicity_limit(args.d)
    record = {
        "command": "limit",
        "inputs": {"d": list(args.d)},
        "results": {
            "multiplicity_limit": fmt(result.multiplicity),
            "method": result.method,
            "limit_coefficients": {
                str(lam): fmt(result.coefficients[lam])
                for lam in sorted(result.coefficients)
            },
        },
    }
    if args.decimal:
        record["decimal"] = {"multiplicity_limit": fmt_decimal(result.multiplicity)}
    emit(record)
    return 0


def cmd_colength(args) -> int:
    results = {}
    if args.method in ("formula", "both"):
        results["formula"] = fmt(colength_formula(args.p, args.a))
    if args.method in ("brute", "both"):
        results["bruteforce"] = fmt(colength_bruteforce(args.p, args.a, args.max_dim))
    record = {
        "command": "colength",
        "inputs": {"p": args.p, "a": list(args.a), "method": args.method},
        "results": results,
    }
    if args.method == "both":
        record["results"]["match"] = results["formula"] == results["bruteforce"]
    emit(record)
    if args.method == "both" and not record["results"]["match"]:
        print(
            f"error: formula {results['formula']} != bruteforce {results['bruteforce']}",
            file=sys.stderr,
        )
        return 3
    return 0


def cmd_frobenius(args) -> int:
    report = sandwich_bounds(args.p, args.d, args.max_dim, args.v_rule)
    s = len(args.d)
    normalized = Fraction(report.e1, args.p ** (s - 1))
    record = {
        "command": "frobenius",
        "inputs": {"p": args.p, "d": list(args.d)},
        "results": {
            "colength": fmt(report.e1),
            "normalized": fmt(normalized),
            "sandwich_lower": fmt(report.lower),
            "sandwich_upper": fmt(report.upper),
            "u": ",".join(str(x) for x in report.u),
            "v": ",".join(str(x) for x in report.v),
            "sandwich_holds": report.holds,
        },
    }
    if args.decimal:
        record["decimal"] = {"normalized": fmt_decimal(normalized)}
    emit(record)
    if not report.holds:
        print("error: sandwich bound violated", file=sys.stderr)
        return 3
    return 0


def cmd_converge(args) -> int:
    if args.pmin > args.pmax:
        raise ValueError("pmin must not exceed pmax")
    primes = primes_in_range(args.pmin, args.pmax)
    rows = convergence_table(args.d, primes, args.rule)
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["p", "a", "value", "gap", "p_times_gap"])
        for row in rows:
            writer.writerow(
                [
                    row.p,
                    " ".join(str(x) for x in row.a),
                    fmt(row.value),
                    fmt(row.gap),
                    fmt(row.p_times_gap),
                ]
            )
    else:
        record = {
            "command": "converge",
            "inputs": {
                "d": list(args.d),
                "pmin": args.pmin,
                "pmax": args.pmax,
                "rule": args.rule,
            },
            "rows": [
                {
                    "p": row.p,
                    "a": list(row.a),
                    "value": fmt(row.value),
                    "gap": fmt(row.gap),
                    "p_times_gap": fmt(row.p_times_gap),
                }
                for row in rows
            ],
        }
        emit(record)
    return 0


def cmd_zigzag(args) -> int:
    coeffs = [zigzag_coefficient(k) for k in range(args.n + 1)]
    record = {
        "command": "zigzag",
        "inputs": {"n": args.n},
        "results": {
            "coefficients": [fmt(c) for c in coeffs],
            "zigzag_numbers": [fmt(e) for e in zigzag_numbers(args.n)],
        },
    }
    if args.decimal:
        record["decimal"] = {"coefficients": [fmt_decimal(c) for c in coeffs]}
    emit(record)
    return 0


def cmd_eulerian(args) -> int:
    poly = eulerian_polynomial(args.n)
    coeffs = poly.coefficients if poly.coefficients else (0,)
    results = {"coefficients": [fmt(c) for c in coeffs]}
    if args.eval is not None:
        point = {"1": 1, "-1": -1, "i": I}[args.eval]
        results["evaluated_at"] = args.eval
        results["value"] = fmt(poly.evaluate(point))
    record = {
        "command": "eulerian",
        "inputs": {"n": args.n},
        "results": results,
    }
    emit(record)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hklimit",
        description="Exact Hilbert-Kunz colengths of diagonal hypersurfaces "
        "over F_p and their large-p multiplicity limits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_limit = sub.add_parser("limit", help="exact large-p limit of the multiplicity")
    p_limit.add_argument("--d", type=int_list, required=True, metavar="D1,D2,...")
    p_limit.add_argument("--decimal", action="store_true", help="add float approximations")
    p_limit.set_defaults(func=cmd_limit)

    p_col = sub.add_parser("colength", help="colength of (sum x_i, x_1^a1, ..., x_s^as)")
    p_col.add_argument("--p", type=int, required=True)
    p_col.add_argument("--a", type=int_list, required=True, metavar="A1,A2,...")
    p_col.add_argument("--method", choices=("formula", "brute", "both"), default="formula")
    p_col.add_argument("--max-dim", type=int, default=MAX_DIM, dest="max_dim")
    p_col.set_defaults(func=cmd_colength)

    p_frob = sub.add_parser(
        "frobenius", help="colength of (sum x_i^di, x_1^p, ..., x_s^p) with sandwich bounds"
    )
    p_frob.add_argument("--p", type=int, required=True)
    p_frob.add_argument("--d", type=int_list, required=True, metavar="D1,D2,...")
    p_frob.add_argument("--max-dim", type=int, default=MAX_DIM, dest="max_dim")
    p_frob.add_argument("--v-rule", choices=("ceil", "successor"), default="ceil", dest="v_rule")
    p_frob.add_argument("--decimal", action="store_true")
    p_frob.set_defaults(func=cmd_frobenius)

    p_conv = sub.add_parser("converge", help="normalized colengths against the exact limit")
    p_conv.add_argument("--d", type=int_list, required=True, metavar="D1,D2,...")
    p_conv.add_argument("--pmin", type=int, required=True)
    p_conv.add_argument("--pmax", type=int, required=True)
    p_conv.add_argument("--format", choices=("csv", "json"), default="csv")
    p_conv.add_argument(
        "--rule", choices=("floor-parity", "floor", "ceil"), default="floor-parity"
    )
    p_conv.set_defaults(func=cmd_converge)

    p_zig = sub.add_parser("zigzag", help="sec z + tan z coefficients and zigzag numbers")
    p_zig.add_argument("--n", type=int, required=True)
    p_zig.add_argument("--decimal", action="store_true")
    p_zig.set_defaults(func=cmd_zigzag)

    p_eul = sub.add_parser("eulerian", help="Eulerian polynomial coefficients")
    p_eul.add_argument("--n", type=int, required=True)
    p_eul.add_argument("--eval", choices=("1", "-1", "i"), default=None)
    p_eul.set_defaults(func=cmd_eulerian)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
