"""Command line entry point: aqdfigs plot <figure> --csv-dir DIR --out FILE."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import AqdfigsError
from .recipes import FIGURE_NAMES


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aqdfigs",
        description="Render the standard figures from aqdsim preset CSVs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    plot = sub.add_parser("plot", help="render one figure to an image file")
    plot.add_argument("figure", choices=FIGURE_NAMES)
    plot.add_argument("--csv-dir", type=Path, default=Path("."),
                      help="directory holding the preset CSV files")
    plot.add_argument("--out", type=Path, default=None,
                      help="output image path (default: <figure>.png)")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    from .render import render  # deferred: pulls in matplotlib

    out = args.out if args.out is not None else Path(f"{args.figure}.png")
    try:
        written = render(args.figure, args.csv_dir, out)
    except (AqdfigsError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    print(written)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
