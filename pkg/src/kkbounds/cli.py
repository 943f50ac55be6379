"""Command line: bound evaluation, cascade display, validation, sweeps, self-test.

Exit codes: 0 success, 2 usage error, 3 validation failure, 4 self-test failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .approx import best_r, bound_report, colorapprox_bound, flag_r, lovasz_bound, noreasy_bound, withoutr_bound
from .cascade import (
    FaceVector,
    cascade_decompose,
    cascade_evaluate,
    shadow_bound,
    validate_face_vector,
)
from .colored import (
    colored_cascade_decompose,
    colored_cascade_evaluate,
    validate_colored_face_vector,
)
from .complexes import realize_face_vector, serialize
from .selftest import geometric_grid, run_selftest

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVALID = 3
EXIT_SELFTEST = 4

SWEEP_COLUMNS = (
    "m",
    "kk_exact",
    "lovasz",
    "withoutr",
    "noreasy",
    "withr_r",
    "withr",
    "flag_r",
    "flag",
)


def _fmt(value) -> str:
    """Exact integers verbatim, reals with 12 significant digits, blanks empty."""
    if value is None:
        return ""
    if isinstance(value, int):
        return str(value)
    return format(value, ".12g")


def sample_grid(m_start: int, m_end: int, samples, linear: bool = False) -> list[int]:
    """Strictly increasing m values from m_start to m_end inclusive.

    samples is an integer >= 2 or the string "all"; spacing is geometric by
    default because the bounds are power laws.
    """
    if samples == "all":
        if m_start < 1 or m_end < m_start:
            raise ValueError(f"need 1 <= m_start <= m_end, got {m_start}, {m_end}")
        return list(range(m_start, m_end + 1))
    samples = int(samples)
    if not linear:
        return geometric_grid(m_start, m_end, samples)
    if m_start < 1 or m_end < m_start:
        raise ValueError(f"need 1 <= m_start <= m_end, got {m_start}, {m_end}")
    if samples < 2:
        raise ValueError(f"samples must be >= 2, got {samples}")
    if samples > m_end - m_start + 1:
        raise ValueError(
            f"cannot place {samples} distinct integers in [{m_start}, {m_end}]"
        )
    out, prev = [], m_start - 1
    for i in range(samples):
        t = i / (samples - 1)
        v = max(round(m_start + t * (m_end - m_start)), prev + 1)
        v = min(v, m_end - (samples - 1 - i))
        out.append(v)
        prev = v
    return out


def _cmd_bound(args) -> int:
    report = bound_report(args.m, args.k, args.p, args.r)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "m": report.m,
                    "k": report.k,
                    "p": report.p,
                    "kk_exact": report.kk_exact,
                    "lovasz_x": report.lovasz_x,
                    "lovasz": report.lovasz,
                    "withoutr": report.withoutr,
                    "noreasy": report.noreasy,
                    "withr_r": report.withr_r,
                    "withr": report.withr,
                    "flag_r": report.flag_r,
                    "flag": report.flag,
                }
            )
        )
        return EXIT_OK
    print(f"m         {report.m}")
    print(f"k, p      {report.k}, {report.p}")
    print(f"kk_exact  {report.kk_exact}")
    print(f"lovasz_x  {_fmt(report.lovasz_x)}")
    print(f"lovasz    {_fmt(report.lovasz)}")
    print(f"withoutr  {_fmt(report.withoutr)}")
    print(f"noreasy   {_fmt(report.noreasy)}")
    print(f"withr     {_fmt(report.withr)}  (r={report.withr_r})")
    print(f"flag      {_fmt(report.flag)}  (r={report.flag_r})")
    return EXIT_OK


def _cmd_cascade(args) -> int:
    if args.r is None:
        rep = cascade_decompose(args.m, args.k)
        total = cascade_evaluate(rep)
    else:
        rep = colored_cascade_decompose(args.m, args.k, args.r)
        total = colored_cascade_evaluate(rep)
    print(f"{total} = {rep}")
    return EXIT_OK


def _cmd_validate(args) -> int:
    try:
        entries = tuple(int(token) for token in args.vector.split(","))
    except ValueError:
        raise ValueError(f"cannot parse face vector from {args.vector!r}")
    f = FaceVector(entries)
    if args.r is None:
        result = validate_face_vector(f)
    else:
        result = validate_colored_face_vector(f, args.r)
    if not result.ok:
        print(f"invalid at k={result.failing_k}")
        return EXIT_INVALID
    print("valid")
    if args.realize:
        print(serialize(realize_face_vector(f)))
    return EXIT_OK


def _sweep_row(m: int, k: int, p: int, r_mode: str, fixed_r) -> dict:
    row = {
        "m": m,
        "kk_exact": shadow_bound(m, k, p),
        "lovasz": lovasz_bound(m, k, p),
        "withoutr": withoutr_bound(m, k, p),
        "noreasy": noreasy_bound(m, k, p),
    }
    if r_mode == "off":
        row.update(withr_r=None, withr=None, flag_r=None, flag=None)
        return row
    fr = flag_r(m, k)
    if r_mode == "auto-best":
        wr = best_r(m, k)
    elif r_mode == "auto-flag":
        wr = fr
    else:
        wr = fixed_r
    row.update(
        withr_r=wr,
        withr=colorapprox_bound(m, k, p, wr),
        flag_r=fr,
        flag=colorapprox_bound(m, k, p, fr),
    )
    return row


def _cmd_sweep(args) -> int:
    if not 1 <= args.p < args.k:
        raise ValueError(f"need 1 <= p < k, got p={args.p}, k={args.k}")
    if args.r_mode == "fixed":
        if args.r is None:
            raise ValueError("--r-mode fixed requires --r")
        if args.r < args.k:
            raise ValueError(f"need k <= r, got k={args.k}, r={args.r}")
    ms = sample_grid(args.m_start, args.m_end, args.samples, linear=args.linear)
    rows = [_sweep_row(m, args.k, args.p, args.r_mode, args.r) for m in ms]
    if args.format == "json":
        print(json.dumps(rows))
    else:
        print(",".join(SWEEP_COLUMNS))
        for row in rows:
            print(",".join(_fmt(row[col]) for col in SWEEP_COLUMNS))
    return EXIT_OK


def _cmd_selftest(args) -> int:
    return EXIT_OK if run_selftest(args.scale) else EXIT_SELFTEST


def _samples_arg(text: str):
    if text == "all":
        return "all"
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"samples must be an integer or 'all', got {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kkbounds",
        description="Exact and approximate lower bounds on face counts of simplicial complexes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bound = sub.add_parser("bound", help="evaluate every bound at one (m, k, p)")
    p_bound.add_argument("--m", type=int, required=True, help="number of faces on k vertices")
    p_bound.add_argument("--k", type=int, required=True)
    p_bound.add_argument("--p", type=int, required=True)
    p_bound.add_argument("--r", type=int, help="color count for the colored bound (default: best_r)")
    p_bound.add_argument("--format", choices=("table", "json"), default="table")
    p_bound.set_defaults(handler=_cmd_bound)

    p_cascade = sub.add_parser("cascade", help="show the (colored) cascade of m at level k")
    p_cascade.add_argument("--m", type=int, required=True)
    p_cascade.add_argument("--k", type=int, required=True)
    p_cascade.add_argument("--r", type=int, help="color budget; switches to the colored cascade")
    p_cascade.set_defaults(handler=_cmd_cascade)

    p_validate = sub.add_parser("validate", help="check a face vector, e.g. 1,4,6,4,1")
    p_validate.add_argument("vector", help="comma-separated face counts starting with 1")
    p_validate.add_argument("--r", type=int, help="validate against the r-colorable conditions")
    p_validate.add_argument(
        "--realize", action="store_true", help="print a complex realizing the vector"
    )
    p_validate.set_defaults(handler=_cmd_validate)

    p_sweep = sub.add_parser("sweep", help="CSV/JSON sweep of all bounds over a range of m")
    p_sweep.add_argument("--k", type=int, required=True)
    p_sweep.add_argument("--p", type=int, required=True)
    p_sweep.add_argument("--m-start", type=int, default=1)
    p_sweep.add_argument("--m-end", type=int, required=True)
    p_sweep.add_argument("--samples", type=_samples_arg, default=200)
    p_sweep.add_argument(
        "--linear", action="store_true", help="sample at equal spacing instead of equal ratios"
    )
    p_sweep.add_argument(
        "--r-mode",
        choices=("auto-best", "auto-flag", "fixed", "off"),
        default="auto-best",
        help="how the withr column picks r (flag columns always use flag_r)",
    )
    p_sweep.add_argument("--r", type=int, help="r for --r-mode fixed")
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.set_defaults(handler=_cmd_sweep)

    p_selftest = sub.add_parser("selftest", help="run the invariant suites")
    p_selftest.add_argument("--scale", choices=("quick", "full"), default="quick")
    p_selftest.set_defaults(handler=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
