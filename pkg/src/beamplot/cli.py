"""Command-line front end: ``beamplot inspect | stats | plot``.

Wires ingestion, statistics, model building and SVG rendering together with
a fixed stream contract: results go to standard output (or ``--output``),
warnings and errors go to standard error.  Exit codes: 0 success, 1 usage
error, 2 unreadable or unparseable input.

Outputs are deterministic for fixed inputs and a pinned ``--census-year``;
the census year defaults to the current calendar year only as an
interactive convenience.
"""

from __future__ import annotations

import argparse
import datetime
import json
import sys
from dataclasses import dataclass

from .metrics import WeightingPolicy
from .model import (
    EmptyDatasetError,
    ValueMode,
    build_model,
    model_to_json,
    model_to_table,
    table_to_csv,
)
from .render import DegenerateCanvasError, RenderConfig, render_beamplot
from .wos import WosExportError, merge_datasets, parse_wos_export, report_to_dict

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2

_MODES = {"raw": ValueMode.RAW, "weighted": ValueMode.AGE_WEIGHTED}


@dataclass(frozen=True)
class RunConfig:
    """One resolved CLI invocation."""

    command: str
    inputs: tuple[str, ...]
    mode: ValueMode = ValueMode.RAW
    census_year: int | None = None
    output: str | None = None
    fmt: str = ""
    min_year: int | None = None
    max_year: int | None = None
    width: int | None = None
    height: int | None = None


class _ArgumentParser(argparse.ArgumentParser):
    # Reserve exit status 2 for data errors; argparse defaults to 2 for usage.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="beamplot",
        description="Beamplots and citation statistics from Web of Science tab-delimited exports.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-i",
        "--input",
        dest="inputs",
        action="append",
        required=True,
        metavar="FILE",
        help="WoS tab-delimited export; repeat for multi-file downloads",
    )
    common.add_argument(
        "--census-year",
        type=int,
        help="count citations up to this calendar year (default: current year)",
    )

    analysis = argparse.ArgumentParser(add_help=False)
    analysis.add_argument("--mode", choices=sorted(_MODES), default="raw")
    analysis.add_argument("--min-year", type=int, help="drop records published before this year")
    analysis.add_argument("--max-year", type=int, help="drop records published after this year")
    analysis.add_argument("-o", "--output", metavar="PATH", help="write here instead of stdout")

    inspect = sub.add_parser(
        "inspect", parents=[common], help="parse inputs and report diagnostics as JSON"
    )
    inspect.add_argument("--format", dest="fmt", choices=["json"], default="json")

    stats = sub.add_parser(
        "stats", parents=[common, analysis], help="per-year summary table with h-index"
    )
    stats.add_argument("--format", dest="fmt", choices=["csv", "json"], default="csv")

    plot = sub.add_parser("plot", parents=[common, analysis], help="render the beamplot SVG")
    plot.add_argument("--format", dest="fmt", choices=["svg"], default="svg")
    plot.add_argument("--width", type=int, help="canvas width in px")
    plot.add_argument("--height", type=int, help="canvas height in px")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.census_year is not None and args.census_year < 1500:
        parser.error(f"--census-year must be >= 1500, got {args.census_year}")
    min_year = getattr(args, "min_year", None)
    max_year = getattr(args, "max_year", None)
    if min_year is not None and max_year is not None and min_year > max_year:
        parser.error(f"--min-year {min_year} exceeds --max-year {max_year}")
    for name in ("width", "height"):
        value = getattr(args, name, None)
        if value is not None and value <= 0:
            parser.error(f"--{name} must be positive, got {value}")

    config = RunConfig(
        command=args.command,
        inputs=tuple(args.inputs),
        mode=_MODES[getattr(args, "mode", "raw")],
        census_year=args.census_year,
        output=getattr(args, "output", None),
        fmt=args.fmt,
        min_year=min_year,
        max_year=max_year,
        width=getattr(args, "width", None),
        height=getattr(args, "height", None),
    )
    return run(config)


def run(config: RunConfig) -> int:
    """Execute one resolved invocation; returns the process exit status."""
    census_year = config.census_year
    if census_year is None:
        census_year = datetime.date.today().year

    parsed = []
    for path in config.inputs:
        try:
            with open(path, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            print(f"beamplot: error: cannot read {path}: {exc}", file=sys.stderr)
            return EXIT_DATA
        try:
            records, report = parse_wos_export(data, census_year=census_year)
        except WosExportError as exc:
            print(f"beamplot: error: {path}: {exc}", file=sys.stderr)
            return EXIT_DATA
        parsed.append((path, records, report))

    if config.command == "inspect":
        doc = {
            "census_year": census_year,
            "files": [{"path": path, **report_to_dict(report)} for path, _, report in parsed],
            "merged_records": len(merge_datasets(records for _, records, _ in parsed)),
        }
        _write(json.dumps(doc, indent=2) + "\n", config.output)
        return EXIT_OK

    for path, _, report in parsed:
        for warning in report.warnings:
            print(f"{path}:{warning.line}: {warning.code}: {warning.message}", file=sys.stderr)

    records = merge_datasets(records for _, records, _ in parsed)
    if config.min_year is not None:
        records = [r for r in records if r.pub_year >= config.min_year]
    if config.max_year is not None:
        records = [r for r in records if r.pub_year <= config.max_year]

    policy = WeightingPolicy(census_year=census_year)
    try:
        model = build_model(records, config.mode, policy)
    except EmptyDatasetError:
        print("beamplot: error: no usable records after parsing and filtering", file=sys.stderr)
        return EXIT_DATA

    if config.command == "stats":
        if config.fmt == "json":
            _write(model_to_json(model), config.output)
        else:
            _write(table_to_csv(model_to_table(model)), config.output)
        return EXIT_OK

    render_config = RenderConfig()
    if config.width is not None or config.height is not None:
        render_config = RenderConfig(
            width_px=config.width or render_config.width_px,
            height_px=config.height or render_config.height_px,
        )
    try:
        svg = render_beamplot(model, render_config)
    except DegenerateCanvasError as exc:
        print(f"beamplot: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _write(svg, config.output)
    return EXIT_OK


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def entrypoint() -> None:
    raise SystemExit(main())
