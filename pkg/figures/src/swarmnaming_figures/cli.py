"""Command-line entry point: regenerate figures from summary CSVs."""
from __future__ import annotations

import argparse
import sys

from .charts import FIGURES, render
from .data import SchemaError


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="figures", description="Regenerate figures from swarmnaming CSV summaries"
    )
    parser.add_argument("--in", dest="in_dir", required=True, help="CSV directory")
    parser.add_argument("--out", required=True, help="image output directory")
    parser.add_argument(
        "--only",
        nargs="+",
        choices=sorted(FIGURES),
        help="render only these figure ids",
    )
    args = parser.parse_args(argv)
    ids = args.only or sorted(FIGURES)
    for figure_id in ids:
        try:
            path = render(figure_id, args.in_dir, args.out)
        except SchemaError as exc:
            print(f"{figure_id}: {exc}", file=sys.stderr)
            return 1
        print(f"{figure_id}: {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
