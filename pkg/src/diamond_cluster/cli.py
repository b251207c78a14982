"""Command-line interface: sweep, figure, verify."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .sweep import (
    FIGURES,
    MEASURE_NAMES,
    ConfigInvalidError,
    config_from_dict,
    reproduce_figure,
    run_sweep,
    write_series_csv,
)
from .verify import run_battery

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_CONFIG_ERROR = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diamond-cluster",
        description="Exact entanglement dynamics of the four-spin diamond cluster.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="sample measures on a uniform time grid, emit CSVs")
    sweep.add_argument("--config", type=Path, help="JSON config file (flags override it)")
    sweep.add_argument("--j", type=float, help="xy exchange of the central pair (default 0)")
    sweep.add_argument("--jz", type=float, help="z exchange of the central pair (default 1)")
    sweep.add_argument("--j0", type=float, help="side-coupling strength (default 0)")
    sweep.add_argument("--ratio", type=float, help="set j0 = ratio * (jz - j) instead of --j0")
    sweep.add_argument("--h", type=float, help="field on the side spins (default 0)")
    sweep.add_argument("--hp", type=float, help="field on the central spins (default 0)")
    sweep.add_argument("--t-max", type=float, help="end of the time grid (default 2*pi)")
    sweep.add_argument("--steps", type=int, help="number of grid points (default 1001)")
    sweep.add_argument(
        "--measures",
        help="comma-separated subset of: " + ",".join(MEASURE_NAMES) + " (default c_ab)",
    )
    sweep.add_argument("--log-base", type=float, help="entropy logarithm base (default 2)")
    sweep.add_argument("--out", help="output directory (default ./out)")

    figure = sub.add_parser("figure", help="reproduce a published figure as CSV + SVG")
    figure.add_argument("fig_id", choices=sorted(FIGURES) + ["all"], help="figure panel id")
    figure.add_argument("--out", default="out", help="output directory (default ./out)")

    verify = sub.add_parser("verify", help="run the analytic-vs-numeric cross-check battery")
    verify.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    verify.add_argument("--samples", type=int, default=100, help="random draws per check (default 100)")

    return parser


_FLAG_KEYS = ("j", "jz", "j0", "ratio", "t_max", "steps", "measures", "log_base")


def _sweep_config(args: argparse.Namespace):
    data: dict = {}
    if args.config is not None:
        try:
            data.update(json.loads(args.config.read_text(encoding="utf-8")))
        except OSError as exc:
            raise ConfigInvalidError(f"config: cannot read {args.config}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigInvalidError(f"config: invalid JSON in {args.config}: {exc}") from exc
    for key in _FLAG_KEYS + ("h", "hp"):
        value = getattr(args, key)
        if value is not None:
            data[key] = value
    if args.ratio is not None:
        # a flag-level ratio supersedes any j0 carried over from the file
        if args.j0 is None:
            data.pop("j0", None)
    if args.out is not None:
        data["output_path"] = args.out
    return config_from_dict(data)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)

    if args.command == "sweep":
        try:
            cfg = _sweep_config(args)
        except ConfigInvalidError as exc:
            print(f"config error: {exc}", file=sys.stderr)
            return EXIT_CONFIG_ERROR
        out_dir = Path(cfg.output_path)
        out_dir.mkdir(parents=True, exist_ok=True)
        for series in run_sweep(cfg):
            path = write_series_csv(series, out_dir / f"sweep_{series.measure}.csv")
            print(f"wrote {path} ({len(series.times)} points, t_scale {series.meta['t_scale']:g})")
        return EXIT_OK

    if args.command == "figure":
        ids = sorted(FIGURES) if args.fig_id == "all" else [args.fig_id]
        for fig_id in ids:
            for path in reproduce_figure(fig_id, args.out):
                print(f"wrote {path}")
        return EXIT_OK

    if args.samples < 1:
        print("config error: samples: must be >= 1", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    report = run_battery(args.seed, args.samples)
    print(report.text(), end="")
    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED


if __name__ == "__main__":
    sys.exit(main())
