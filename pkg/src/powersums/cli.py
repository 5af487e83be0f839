"""Command-line front end.

    powersums closed-form 3 --format plain
    powersums g-poly 4 --format latex
    powersums verify 12 --n-max 300

Exit status: 0 on success, 1 on a verification mismatch or engine
consistency failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from typing import List, Optional

from . import engine
from .engine import ConsistencyError, PowerSumTable
from .exact_poly import UniPoly
from .formatting import dumps, poly_to_json_obj, to_latex, to_plain
from .oracle import verify_poly
from .resultant import relation_polynomial

DEFAULT_MAX_K = 200


def _common_flags(suppress: bool) -> argparse.ArgumentParser:
    # same flags on the top-level parser and every subcommand; the
    # subcommand copies default to SUPPRESS so they never clobber a value
    # given before the subcommand name
    p = argparse.ArgumentParser(add_help=False)
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=("plain", "latex", "json"), default=d("plain"))
    p.add_argument("--max-k", type=int, default=d(DEFAULT_MAX_K), metavar="BOUND")
    p.add_argument(
        "--symbols", choices=("xy", "AB"), default=d("xy"),
        help="names for the bivariate variables (x, y) or (A, B)",
    )
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powersums",
        description="Exact closed forms of power sums 1^k + ... + n^k.",
        parents=[_common_flags(False)],
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = [_common_flags(True)]

    p = sub.add_parser("closed-form", parents=common, help="S_k(n) as a polynomial in n")
    p.add_argument("k", type=int)
    p.add_argument("--route", choices=engine.ROUTES, default="halfterm")

    p = sub.add_parser("g-poly", parents=common, help="g_k(x, y) with S_k = g_k(A, B)")
    p.add_argument("k", type=int)

    p = sub.add_parser("faulhaber-a", parents=common, help="f_k(x) with S_k = f_k(A), odd k")
    p.add_argument("k", type=int)

    p = sub.add_parser("even-factor", parents=common, help="y q(x) with S_k = B q(A), even k")
    p.add_argument("k", type=int)

    p = sub.add_parser("greedy", parents=common, help="greedy A^a B^b degree reduction of S_k")
    p.add_argument("k", type=int)

    p = sub.add_parser("relation", parents=common, help="T(x, y) with T(S_i, S_j) = 0")
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)

    p = sub.add_parser("verify", parents=common, help="check S_k against direct summation")
    p.add_argument("k", type=int)
    p.add_argument("--n-max", type=int, default=200)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--route", choices=engine.ROUTES, default="halfterm")

    p = sub.add_parser("termcount", parents=common, help="recursion term counts for 3..K")
    p.add_argument("k_max", type=int, metavar="k-max")
    return parser


def _render(poly, args, kind: str, **meta) -> str:
    if args.format == "json":
        variables = ["n"] if isinstance(poly, UniPoly) else list(
            ("A", "B") if args.symbols == "AB" else ("x", "y")
        )
        doc = {"kind": kind, **meta, "format": "json", "body": poly_to_json_obj(poly, variables)}
        return dumps(doc)
    if args.format == "latex":
        return to_latex(poly, args.symbols)
    return to_plain(poly, args.symbols)


def _check_k(parser, args, name: str, value: int, lo: int) -> None:
    if value < lo:
        parser.error(f"argument {name}: must be >= {lo}, got {value}")
    if value > args.max_k:
        parser.error(f"argument {name}: {value} exceeds --max-k {args.max_k}")


def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    with contextlib.redirect_stderr(err):
        try:
            args = parser.parse_args(argv)
            return _dispatch(parser, args, out, err)
        except SystemExit as exc:
            return int(exc.code or 0)
        except ConsistencyError as exc:
            print(f"consistency failure: {exc}", file=err)
            return 1


def _dispatch(parser, args, out, err) -> int:
    cmd = args.command
    emit = lambda text: print(text, file=out)  # noqa: E731

    if cmd == "closed-form":
        _check_k(parser, args, "k", args.k, 0)
        s = PowerSumTable(args.route).closed_form(args.k)
        emit(_render(s, args, cmd, k=args.k))
        return 0

    if cmd == "g-poly":
        _check_k(parser, args, "k", args.k, 1)
        emit(_render(engine.g_poly(args.k, PowerSumTable()), args, cmd, k=args.k))
        return 0

    if cmd == "faulhaber-a":
        _check_k(parser, args, "k", args.k, 3)
        if args.k % 2 == 0:
            parser.error(f"argument k: faulhaber-a needs odd k, got {args.k}")
        emit(_render(engine.faulhaber_in_A(args.k, PowerSumTable()), args, cmd, k=args.k))
        return 0

    if cmd == "even-factor":
        _check_k(parser, args, "k", args.k, 2)
        if args.k % 2:
            parser.error(f"argument k: even-factor needs even k, got {args.k}")
        emit(_render(engine.faulhaber_even_factor(args.k, PowerSumTable()), args, cmd, k=args.k))
        return 0

    if cmd == "greedy":
        _check_k(parser, args, "k", args.k, 1)
        res = engine.decompose_greedy_AB(PowerSumTable().closed_form(args.k))
        if not res.ok:
            print(f"obstructed: residual {to_plain(res.residual)}", file=err)
            return 1
        emit(_render(res.value, args, cmd, k=args.k))
        return 0

    if cmd == "relation":
        _check_k(parser, args, "i", args.i, 1)
        _check_k(parser, args, "j", args.j, 1)
        if args.i == args.j:
            parser.error("arguments i, j: must differ")
        t = relation_polynomial(args.i, args.j, PowerSumTable())
        emit(_render(t, args, cmd, i=args.i, j=args.j))
        return 0

    if cmd == "verify":
        _check_k(parser, args, "k", args.k, 0)
        if args.n_max < 0:
            parser.error("argument --n-max: must be >= 0")
        if args.jobs < 1:
            parser.error("argument --jobs: must be >= 1")
        s = PowerSumTable(args.route).closed_form(args.k)
        report = verify_poly(args.k, s, args.n_max, jobs=args.jobs)
        status = "OK" if report.ok else "FAIL"
        if args.format == "json":
            doc = {
                "kind": "verify", "k": args.k, "n_max": args.n_max, "ok": report.ok,
                "mismatches": [
                    {"n": n, "expected": str(want), "got": str(got)}
                    for n, want, got in report.mismatches
                ],
            }
            emit(dumps(doc))
        else:
            emit(f"{status} k={args.k} n=0..{args.n_max}")
        for n, want, got in report.mismatches[:20]:
            print(f"mismatch n={n}: expected {want}, got {got}", file=err)
        return 0 if report.ok else 1

    if cmd == "termcount":
        _check_k(parser, args, "k-max", args.k_max, 3)
        rows = [engine.term_count_report(k) for k in range(3, args.k_max + 1)]
        if args.format == "json":
            emit(dumps({
                "kind": "termcount", "k_max": args.k_max,
                "rows": [
                    {"k": t.k, "pascal_terms": t.pascal_terms, "halfterm_terms": t.halfterm_terms}
                    for t in rows
                ],
            }))
        elif args.format == "latex":
            emit("\\begin{tabular}{rrr}\nk & Pascal & half-term \\\\")
            for t in rows:
                emit(f"{t.k} & {t.pascal_terms} & {t.halfterm_terms} \\\\")
            emit("\\end{tabular}")
        else:
            for t in rows:
                emit(f"k={t.k} pascal={t.pascal_terms} halfterm={t.halfterm_terms}")
        return 0

    parser.error(f"unknown command {cmd!r}")
    return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
