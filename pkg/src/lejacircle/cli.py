"""Command-line front end.

Subcommands:

    sequence   generate a structural or numerical greedy run as CSV
    constants  emit the limit-constant catalog for an exponent s as JSON
    theta      enumerate digit-direction vectors and search G/Lambda extremes
    figure     emit the plotted series (ids 1-4) as CSV files
    verify     run the verification harness and report pass/fail
    series     emit one normalized series as CSV

Angles in all input and output are turns in [0, 1).  Floats are printed with
17 significant digits so the values round-trip.  Exit codes: 0 success,
1 verification failures, 2 usage/validation errors, 3 compute budget
exceeded.
"""

import argparse
import json
import sys
from pathlib import Path

from . import analysis, binary, special
from .circle import BudgetExceededError, Configuration
from .sequences import (
    canonical_structural,
    extremal_values_structural,
    greedy_numerical,
)

FIGURE_GRIDS = {
    1: {"kind": "log_ratio", "s_values": [0.0], "n_max": 5000},
    2: {"kind": "second_order_subcritical", "s_values": [0.001, 0.1, 0.3, 0.5, 0.7, 0.99], "n_max": 2048},
    3: {"kind": "second_order_1", "s_values": [1.0], "n_max": 2048},
    4: {"kind": "first_order_supercritical", "s_values": [1.005, 1.5, 3.5, 5.0], "n_max": 2048},
}


def _fmt(x) -> str:
    if isinstance(x, float):
        return f"{x:.17g}"
    return str(x)


def _write_lines(lines, out_path):
    text = "\n".join(lines) + "\n"
    if out_path is None:
        sys.stdout.write(text)
    else:
        Path(out_path).write_text(text, encoding="utf-8")


def _parse_initial(text: str) -> Configuration:
    angles = [float(tok) for tok in text.split(",") if tok.strip() != ""]
    if not angles:
        raise ValueError("no initial angles given")
    if any(a < 0 or a >= 1 for a in angles):
        raise ValueError("initial angles must be turns in [0, 1)")
    return Configuration.from_turns(angles)


def cmd_sequence(args) -> int:
    if args.n < 1:
        print("error: --n must be >= 1", file=sys.stderr)
        return 2
    if args.numerical:
        initial = _parse_initial(args.initial)
        run = greedy_numerical(initial, args.s, args.n, grid=args.grid,
                               refine_iters=args.refine_iters)
        rows = run.to_csv_rows()
    else:
        config = canonical_structural(args.n)
        values = extremal_values_structural(max(args.n - 1, 1), args.s) if args.n > 1 else []
        rows = [(0, config[0].angle, "")]
        rows += [(n, config[n].angle, values[n - 1]) for n in range(1, args.n)]
    lines = ["n,angle_turns,extremal_value"]
    lines += [f"{n},{_fmt(a)},{_fmt(v)}" for n, a, v in rows]
    _write_lines(lines, args.out)
    return 0


def cmd_constants(args) -> int:
    catalog = special.limit_catalog(args.s, max_bits=args.max_bits)
    text = json.dumps(catalog.to_dict(), indent=2)
    if args.out is None:
        print(text)
    else:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    return 0


def cmd_theta(args) -> int:
    vectors = binary.enumerate_theta(args.p, args.max_bits)
    if args.format == "csv":
        lines = ["M,t,p,components,g_value,lambda_value"]
        for theta in vectors:
            comps = "|".join(str(c) for c in theta.components())
            g = binary.g_value(theta, args.s) if args.s != 1 else 1.0
            lines.append(
                f"{theta.m},{theta.t},{theta.p},{comps},{_fmt(g)},{_fmt(binary.lambda_value(theta))}"
            )
        _write_lines(lines, args.out)
        return 0
    payload = {
        "p": args.p,
        "max_bits": args.max_bits,
        "s": args.s,
        "count": len(vectors),
        "lambda_search": None,
        "g_search": None,
    }
    lam = binary.search_lambda(args.max_bits)
    payload["lambda_search"] = {
        "inf_found": lam.inf_found,
        "witness_m": lam.witness.m,
        "family_inf": lam.family_inf,
    }
    if args.s != 1:
        g = binary.search_g_extremes(args.s, args.max_bits)
        payload["g_search"] = {
            "sup_found": g.sup_found,
            "inf_found": g.inf_found,
            "sup_witness_m": g.sup_witness.m,
            "inf_witness_m": g.inf_witness.m,
            "family_sup": g.family_sup,
            "family_inf": g.family_inf,
        }
    text = json.dumps(payload, indent=2)
    if args.out is None:
        print(text)
    else:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    return 0


def _figure_series(kind, s, n_max):
    if kind == "log_ratio":
        return analysis.normalized_series("log_ratio", 0.0, n_max)
    if kind == "second_order_subcritical":
        return analysis.extremal_second_order_series(s, n_max)
    if kind == "second_order_1":
        return analysis.normalized_series("second_order_1", 1.0, n_max)
    return analysis.extremal_first_order_series(s, n_max)


def cmd_figure(args) -> int:
    if args.id not in FIGURE_GRIDS:
        print(f"error: unknown figure id {args.id}", file=sys.stderr)
        return 2
    plan = FIGURE_GRIDS[args.id]
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for s in plan["s_values"]:
        series = _figure_series(plan["kind"], s, plan["n_max"])
        name = f"fig{args.id}.csv" if len(plan["s_values"]) == 1 else f"fig{args.id}_s{s:g}.csv"
        lines = ["N,value"]
        lines += [f"{n},{_fmt(v)}" for n, v in series.entries]
        _write_lines(lines, out_dir / name)
        print(out_dir / name)
    return 0


def cmd_series(args) -> int:
    series = analysis.normalized_series(args.kind, args.s, args.n_max)
    lines = ["N,value"]
    lines += [f"{n},{_fmt(v)}" for n, v in series.entries]
    _write_lines(lines, args.out)
    return 0


def cmd_verify(args) -> int:
    s_grid = args.s if args.s else [0.5, 1.0, 1.5, 2.0]
    if args.include_subcritical and not any(0 < s < 1 for s in s_grid):
        print("error: --include-subcritical requires an s value in (0, 1)", file=sys.stderr)
        return 2
    report = analysis.verify_all(n_max=args.n_max, s_grid=s_grid)
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        detail = f"  ({check.detail})" if check.detail else ""
        print(f"[{status}] {check.name}: residual={check.residual:.3e} budget={check.budget:.3e}{detail}")
    print(f"{'all checks passed' if report.all_pass else 'FAILURES present'}")
    if args.json_out:
        Path(args.json_out).write_text(json.dumps(report.to_dict(), indent=2) + "\n", encoding="utf-8")
    return 0 if report.all_pass else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lejacircle",
        description="Greedy Riesz/Leja energy sequences on the unit circle",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_seq = sub.add_parser("sequence", help="generate a greedy sequence as CSV")
    mode = p_seq.add_mutually_exclusive_group()
    mode.add_argument("--structural", action="store_true",
                      help="exact bit-reversal construction (default)")
    mode.add_argument("--numerical", action="store_true",
                      help="direct numerical minimization")
    p_seq.add_argument("--n", type=int, default=2048, help="number of points")
    p_seq.add_argument("--s", type=float, default=0.5, help="Riesz exponent")
    p_seq.add_argument("--initial", type=str, default="0",
                       help="comma-separated initial turn angles (numerical mode)")
    p_seq.add_argument("--grid", type=int, default=4096, help="samples per unit arc")
    p_seq.add_argument("--refine-iters", type=int, default=40,
                       help="golden-section refinement iterations")
    p_seq.add_argument("--out", type=str, default=None, help="output CSV path (default stdout)")
    p_seq.set_defaults(func=cmd_sequence)

    p_const = sub.add_parser("constants", help="limit-constant catalog as JSON")
    p_const.add_argument("--s", type=float, required=True)
    p_const.add_argument("--max-bits", type=int, default=16,
                         help="search frontier for liminf brackets")
    p_const.add_argument("--out", type=str, default=None)
    p_const.set_defaults(func=cmd_constants)

    p_theta = sub.add_parser("theta", help="digit-direction vectors and searches")
    p_theta.add_argument("--p", type=int, default=16, help="vector length")
    p_theta.add_argument("--max-bits", type=int, default=16)
    p_theta.add_argument("--s", type=float, default=0.5)
    p_theta.add_argument("--format", choices=["csv", "json"], default="json")
    p_theta.add_argument("--out", type=str, default=None)
    p_theta.set_defaults(func=cmd_theta)

    p_fig = sub.add_parser("figure", help="emit plotted series as CSV files")
    p_fig.add_argument("--id", type=int, required=True, help="figure id in {1,2,3,4}")
    p_fig.add_argument("--out-dir", type=str, default="figures")
    p_fig.set_defaults(func=cmd_figure)

    p_ser = sub.add_parser("series", help="emit one normalized series as CSV")
    p_ser.add_argument("--kind", choices=list(analysis.SERIES_KINDS), required=True)
    p_ser.add_argument("--s", type=float, required=True)
    p_ser.add_argument("--n-max", type=int, default=2048)
    p_ser.add_argument("--out", type=str, default=None)
    p_ser.set_defaults(func=cmd_series)

    p_ver = sub.add_parser("verify", help="run the verification harness")
    p_ver.add_argument("--n-max", type=int, default=2048)
    p_ver.add_argument("--s", type=float, action="append", default=None,
                       help="exponent to include (repeatable; default grid 0.5,1,1.5,2)")
    p_ver.add_argument("--include-subcritical", action="store_true",
                       help="require subcritical checks (an s in (0,1) must be present)")
    p_ver.add_argument("--json-out", type=str, default=None)
    p_ver.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
