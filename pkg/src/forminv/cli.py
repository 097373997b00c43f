"""Command-line front end.

Subcommands:
  count   -- one invariant count
  series  -- a Poincare-series table in text/json/csv
  verify  -- cross-method and structural self-checks
  bench   -- wall-time per method per degree

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 work limit
exceeded.  Data goes to stdout (or --out), diagnostics to stderr.
Counts are serialized as decimal strings in JSON so arbitrary-precision
values survive 64-bit consumers.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional

from . import counts, sl3, weights
from .counts import (
    BINARY_METHODS,
    DEFAULT_WORK_LIMIT,
    TERNARY_METHODS,
    WorkLimitExceeded,
    poincare_series,
)

_ALL_METHODS = sorted(set(BINARY_METHODS) | set(TERNARY_METHODS))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="forminv",
        description="Exact counts of invariants of binary and ternary forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="print a single invariant count")
    _add_form_flags(p_count)
    p_count.add_argument("--n", type=int, required=True, help="invariant degree")
    p_count.add_argument("--json", action="store_true", help="emit a JSON object")
    _add_common_flags(p_count)
    p_count.set_defaults(func=cmd_count)

    p_series = sub.add_parser("series", help="print a Poincare series table")
    _add_form_flags(p_series)
    p_series.add_argument("--max", type=int, required=True, help="maximum degree")
    p_series.add_argument(
        "--format", choices=("text", "json", "csv"), default="text"
    )
    p_series.add_argument(
        "--skip-zeros", action="store_true", help="omit zero coefficients"
    )
    _add_common_flags(p_series)
    p_series.set_defaults(func=cmd_series)

    p_verify = sub.add_parser("verify", help="run cross-method self-checks")
    p_verify.add_argument("--d-max", type=int, default=4)
    p_verify.add_argument("--n-max", type=int, default=9)
    p_verify.add_argument("--lambda-max", type=int, default=20)
    _add_common_flags(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="time each ternary method")
    p_bench.add_argument("--d", type=int, required=True)
    p_bench.add_argument("--max", type=int, required=True)
    p_bench.add_argument("--repeat", type=int, default=1)
    _add_common_flags(p_bench)
    p_bench.set_defaults(func=cmd_bench)

    return parser


def _add_form_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--form", choices=("binary", "ternary"), required=True)
    p.add_argument("--d", type=int, required=True, help="form degree")
    p.add_argument("--method", choices=_ALL_METHODS, default=None)


def _add_common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--work-limit",
        type=int,
        default=DEFAULT_WORK_LIMIT,
        help="state-count budget for expensive methods",
    )
    p.add_argument("--out", default=None, help="write stdout content to a file")


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _single_count(form: str, method: Optional[str], d: int, n: int, work_limit: int):
    if method is None:
        method = "omega" if form == "binary" else "counting"
    if form == "binary":
        if method not in BINARY_METHODS:
            raise ValueError(f"method {method!r} invalid for binary forms")
        return method, BINARY_METHODS[method](d, n)
    if method not in TERNARY_METHODS:
        raise ValueError(f"method {method!r} invalid for ternary forms")
    if method == "peel":
        return method, counts.nu_ternary_peel(d, n, work_limit=work_limit)
    return method, TERNARY_METHODS[method](d, n)


def cmd_count(args: argparse.Namespace) -> int:
    method, value = _single_count(
        args.form, args.method, args.d, args.n, args.work_limit
    )
    if args.json:
        obj = {
            "form": args.form,
            "d": args.d,
            "n": args.n,
            "method": method,
            "value": str(value),
        }
        _emit(json.dumps(obj) + "\n", args.out)
    else:
        _emit(f"{value}\n", args.out)
    return 0


def cmd_series(args: argparse.Namespace) -> int:
    method = args.method
    if method is None:
        method = "omega" if args.form == "binary" else "counting"
    rows = poincare_series(
        args.form,
        args.d,
        args.max,
        method=method,
        include_zeros=not args.skip_zeros,
        work_limit=args.work_limit,
    )
    if args.format == "text":
        text = "".join(f"{n}\t{v}\n" for n, v in rows)
    elif args.format == "csv":
        text = "n,value\n" + "".join(f"{n},{v}\n" for n, v in rows)
    else:
        obj = {
            "form": args.form,
            "d": args.d,
            "method": method,
            "coefficients": [{"n": n, "value": str(v)} for n, v in rows],
        }
        text = json.dumps(obj) + "\n"
    _emit(text, args.out)
    return 0


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args: argparse.Namespace) -> int:
    lines: List[str] = []
    ok = True

    def check(name: str, failure: Optional[str]) -> None:
        nonlocal ok
        if failure is None:
            lines.append(f"PASS  {name}")
        else:
            ok = False
            lines.append(f"FAIL  {name}: {failure}")

    check(
        "ternary method agreement",
        _verify_ternary_agreement(args.d_max, args.n_max, args.work_limit),
    )
    check("binary method agreement", _verify_binary_agreement(args.d_max, args.n_max))
    check("trivial-rep functional sweep", _verify_functional(args.lambda_max))
    check(
        "weight table totals",
        _verify_table_totals(min(args.d_max, 4), min(args.n_max, 8)),
    )

    lines.append("PASS" if ok else "FAIL")
    _emit("".join(line + "\n" for line in lines), args.out)
    return 0 if ok else 1


def _verify_ternary_agreement(
    d_max: int, n_max: int, work_limit: int
) -> Optional[str]:
    for d in range(1, d_max + 1):
        base = poincare_series("ternary", d, n_max, method="counting")
        for method in ("genfunc", "pqbinom"):
            rows = poincare_series("ternary", d, n_max, method=method)
            for (n, a), (_, b) in zip(base, rows):
                if a != b:
                    return f"counting={a} but {method}={b} at d={d}, n={n}"
        for n, a in base:
            try:
                b = counts.nu_ternary_peel(d, n, work_limit=work_limit)
            except WorkLimitExceeded:
                continue
            if a != b:
                return f"counting={a} but peel={b} at d={d}, n={n}"
    return None


def _verify_binary_agreement(d_max: int, n_max: int) -> Optional[str]:
    for d in range(1, d_max + 1):
        for n in range(n_max + 1):
            a = counts.gamma_binary(d, n)
            b = counts.gamma_binary_qbinom(d, n)
            if a != b:
                return f"omega={a} but qbinom={b} at d={d}, n={n}"
    return None


def _verify_functional(lambda_max: int) -> Optional[str]:
    for m in range(lambda_max + 1):
        for k in range(lambda_max + 1):
            got = sl3.e_lambda((m, k))
            want = 1 if (m, k) == (0, 0) else 0
            if got != want:
                return f"E({m},{k}) = {got}, expected {want}"
    return None


def _verify_table_totals(d_max: int, n_max: int) -> Optional[str]:
    for d in range(1, d_max + 1):
        for n in range(n_max + 1):
            got = weights.weight_table(d, n).total()
            want = weights.monomial_count(d, n)
            if got != want:
                return f"total {got} != {want} at d={d}, n={n}"
    return None


# ---------------------------------------------------------------------------
# bench


def cmd_bench(args: argparse.Namespace) -> int:
    if args.repeat < 1:
        raise ValueError("--repeat must be >= 1")
    out_lines = ["method,n,millis"]
    for method in ("counting", "genfunc", "pqbinom", "peel"):
        fn = TERNARY_METHODS[method]
        for n in range(args.max + 1):
            best = None
            hit_limit = False
            for _ in range(args.repeat):
                counts.clear_caches()
                start = time.perf_counter()
                try:
                    if method == "peel":
                        fn(args.d, n, work_limit=args.work_limit)
                    else:
                        fn(args.d, n)
                except WorkLimitExceeded:
                    hit_limit = True
                    break
                elapsed = (time.perf_counter() - start) * 1000.0
                if best is None or elapsed < best:
                    best = elapsed
            if hit_limit:
                out_lines.append(f"{method},{n},NA")
            else:
                out_lines.append(f"{method},{n},{best:.3f}")
    _emit("".join(line + "\n" for line in out_lines), args.out)
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except WorkLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
