"""Command-line interface: simulate, batch, summarize."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .batch import parse_sweep_args, run_and_write, run_batch, summarize
from .config import ConfigError, load_config


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swarmnaming",
        description="Foraging-swarm naming-game simulator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="run one simulation")
    sim.add_argument("--config", required=True, help="flat key=value config file")
    sim.add_argument("--seed", type=int, required=True)
    sim.add_argument("--out", required=True, help="output directory")

    bat = sub.add_parser("batch", help="run seeds x parameter grid")
    bat.add_argument("--config", required=True)
    bat.add_argument("--seeds", type=int, required=True, help="run seeds 0..n-1")
    bat.add_argument(
        "--sweep",
        action="append",
        default=[],
        metavar="KEY=V1,V2,...",
        help="sweep a config key over values; repeatable",
    )
    bat.add_argument("--workers", type=int, default=1)
    bat.add_argument("--out", required=True)

    summ = sub.add_parser("summarize", help="aggregate run directories into CSVs")
    summ.add_argument("--in", dest="in_dir", required=True)
    summ.add_argument("--out", required=True)
    summ.add_argument("--origin-bin", type=float, default=100.0, help="seconds")
    summ.add_argument("--interaction-bin", type=float, default=100.0, help="seconds")
    summ.add_argument("--population-every", type=float, default=100.0, help="seconds")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "simulate":
            cfg = load_config(args.config, overrides={"seed": args.seed})
            runs_dir = Path(args.out) / "runs"
            entry = run_and_write(cfg, runs_dir)
            print(f"{entry['run_id']}: {entry['status']} at t={entry['t_end']}s")
        elif args.command == "batch":
            cfg = load_config(args.config)
            sweep = parse_sweep_args(args.sweep)
            results = run_batch(
                cfg,
                seeds=range(args.seeds),
                sweep=sweep,
                out_dir=args.out,
                workers=args.workers,
            )
            n_err = sum(1 for r in results if r["status"] == "error")
            print(f"{len(results)} runs ({n_err} failed) -> {args.out}")
            if n_err:
                return 1
        elif args.command == "summarize":
            paths = summarize(
                args.in_dir,
                args.out,
                origin_bin_s=args.origin_bin,
                interaction_bin_s=args.interaction_bin,
                population_every_s=args.population_every,
            )
            for name, path in paths.items():
                print(f"{name}: {path}")
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
