"""Command-line front end: sweep | analyze | validate.

``sweep`` writes the delimited grid (and optionally a rendered figure),
``analyze`` reports the sampling design numbers, ``validate`` runs the
cross-evaluator suites and exits non-zero on any tolerance breach.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis
from .sweep import (
    PRESETS,
    SweepConfig,
    config_from_dict,
    load_config,
    run_sweep,
    write_csv,
)
from .validate import run_validation


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringaf",
        description="Ambiguity function and MRT/MRC array gain of a circular "
        "cell-free antenna ring.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sw = sub.add_parser("sweep", help="evaluate the AF over a radius grid and write CSV")
    sw.add_argument("--config", help="JSON config file (keys mirror SweepConfig)")
    sw.add_argument("--preset", choices=sorted(PRESETS), help="figure preset")
    sw.add_argument("--out", required=True, help="output CSV path")
    sw.add_argument(
        "--evaluator",
        choices=("quadrature", "series", "direct", "aliased-series"),
        help="AF evaluator",
    )
    sw.add_argument("--n", help="antenna count, or 'continuous'")
    sw.add_argument("--rw", help="comma list of R_W values in lambda ('inf' allowed)")
    sw.add_argument("--theta-ss", type=float, help="displacement angle in radians")
    sw.add_argument("--rmax", type=float, help="sweep upper bound in lambda")
    sw.add_argument("--points", type=int, help="number of grid points")
    sw.add_argument("--ring-radius", type=float, help="ring radius in lambda")
    sw.add_argument("--plot", help="also render the sweep to this image file")

    an = sub.add_parser("analyze", help="resolution / Nyquist / alias-radius report")
    an.add_argument("--n", type=int, help="antenna count")
    an.add_argument("--r-s-max", type=float, help="coverage radius in lambda")
    an.add_argument("--json", dest="json_out", help="also write the report as JSON")

    va = sub.add_parser("validate", help="run the cross-evaluator oracle suites")
    va.add_argument("--level", choices=("fast", "full"), default="fast")
    return parser


def _sweep_config(args) -> SweepConfig:
    base = PRESETS[args.preset] if args.preset else SweepConfig()
    if args.config:
        base = load_config(args.config, base)
    overrides = {}
    if args.n is not None:
        overrides["n_antennas"] = args.n
    if args.rw is not None:
        overrides["rw_list"] = [tok.strip() for tok in args.rw.split(",") if tok.strip()]
    if args.theta_ss is not None:
        overrides["theta_ss"] = args.theta_ss
    if args.rmax is not None:
        overrides["r_max"] = args.rmax
    if args.points is not None:
        overrides["grid_points"] = args.points
    if args.evaluator is not None:
        overrides["evaluator"] = args.evaluator
    if args.ring_radius is not None:
        overrides["ring_radius"] = args.ring_radius
    return config_from_dict(overrides, base)


def cmd_sweep(args) -> int:
    config = _sweep_config(args)
    result = run_sweep(config)
    write_csv(result, args.out)
    print(f"wrote {len(result.radii)} rows x {len(result.labels)} columns to {args.out}")
    if args.plot:
        from .plotting import plot_sweep

        plot_sweep(result, args.plot)
        print(f"wrote figure to {args.plot}")
    return 0


def cmd_analyze(args) -> int:
    if args.n is None and args.r_s_max is None:
        print("analyze: provide --n and/or --r-s-max", file=sys.stderr)
        return 2
    report = {"resolution_lambda": analysis.resolution()}
    if args.n is not None:
        report["n_antennas"] = args.n
        report["alias_radius_lambda"] = analysis.alias_radius(args.n)
    if args.r_s_max is not None:
        report["r_s_max_lambda"] = args.r_s_max
        report["min_antennas"] = analysis.min_antennas(args.r_s_max)
    if args.n is not None and args.r_s_max is not None:
        report["nyquist_bound_satisfied"] = args.n >= report["min_antennas"]
    for key, value in report.items():
        print(f"{key}: {value}")
    if args.json_out:
        with open(args.json_out, "w") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")
    return 0


def cmd_validate(args) -> int:
    results = run_validation(args.level)
    failed = False
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(
            f"{res.name}: {status} max_error={res.max_error:.3e} "
            f"tolerance={res.tolerance:.0e} cases={res.cases}"
            + ("" if res.passed else f" worst: {res.worst_case}")
        )
        failed = failed or not res.passed
    return 1 if failed else 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {"sweep": cmd_sweep, "analyze": cmd_analyze, "validate": cmd_validate}
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
