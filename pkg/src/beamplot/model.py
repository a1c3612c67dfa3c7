"""Render-independent beamplot data: per-year citation rows and medians.

A beamplot summarizes one researcher's record as one row per calendar year
from the first to the last publication year.  Each row carries the citation
values of the papers published that year (raw times-cited, or age-weighted),
their min/median/max, and the paper count.  Years without papers stay in the
span as empty rows so interruptions in output remain visible.
"""

from __future__ import annotations

import enum
import json
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .metrics import FutureYearError, WeightingPolicy, h_index, median, weighted_citations
from .wos import PublicationRecord

Number = int | Fraction


class ValueMode(enum.Enum):
    """What a paper's plotted value is: its citation count, raw or age-weighted."""

    RAW = "raw"
    AGE_WEIGHTED = "age_weighted"


class EmptyDatasetError(ValueError):
    """No records to build a beamplot from."""


@dataclass(frozen=True)
class BeamRow:
    """One publication year: citation values and their summary statistics.

    ``values`` is sorted ascending.  Empty rows (gap years) have
    ``paper_count`` 0 and ``None`` for min/median/max.
    """

    year: int
    values: tuple[Number, ...]
    paper_count: int
    min_value: Number | None
    max_value: Number | None
    median_value: Number | None


@dataclass(frozen=True)
class BeamplotModel:
    """Everything a beamplot shows, before any geometry is involved.

    ``overall_value_median`` pools every paper's value across all years;
    ``overall_count_median`` is the median yearly paper count over the full
    span, gap years counting as zero.  ``h_index`` is always computed from
    raw citation counts, also in age-weighted mode, so it stays comparable.
    """

    rows: tuple[BeamRow, ...]
    overall_value_median: Number
    overall_count_median: Number
    census_year: int
    mode: ValueMode
    total_papers: int
    h_index: int


def build_model(
    records: Sequence[PublicationRecord],
    mode: ValueMode,
    policy: WeightingPolicy,
) -> BeamplotModel:
    """Group deduplicated records by year into a complete beamplot model.

    Expects every ``pub_year`` to be at most ``policy.census_year`` (the
    parser guarantees this when run with the same census year).
    """
    if not records:
        raise EmptyDatasetError("cannot build a beamplot from zero records")

    by_year: dict[int, list[Number]] = defaultdict(list)
    for record in records:
        if record.pub_year > policy.census_year:
            raise FutureYearError(
                f"record {record.ut!r} published in {record.pub_year}, "
                f"after census year {policy.census_year}"
            )
        if mode is ValueMode.AGE_WEIGHTED:
            value: Number = weighted_citations(record, policy)
        else:
            value = record.times_cited
        by_year[record.pub_year].append(value)

    rows = []
    for year in range(min(by_year), max(by_year) + 1):
        values = tuple(sorted(by_year.get(year, ())))
        if values:
            rows.append(
                BeamRow(
                    year=year,
                    values=values,
                    paper_count=len(values),
                    min_value=values[0],
                    max_value=values[-1],
                    median_value=median(values),
                )
            )
        else:
            rows.append(BeamRow(year, (), 0, None, None, None))

    pooled = [value for row in rows for value in row.values]
    return BeamplotModel(
        rows=tuple(rows),
        overall_value_median=median(pooled),
        overall_count_median=median([row.paper_count for row in rows]),
        census_year=policy.census_year,
        mode=mode,
        total_papers=len(records),
        h_index=h_index(record.times_cited for record in records),
    )


# --- serialization ----------------------------------------------------------

SIGNIFICANT_DIGITS = 6


def format_number(value: Number) -> str:
    """Exact integers verbatim; anything fractional at 6 significant digits."""
    as_fraction = Fraction(value)
    if as_fraction.denominator == 1:
        return str(as_fraction.numerator)
    return format(float(as_fraction), f".{SIGNIFICANT_DIGITS}g")


def _json_number(value: Number | None) -> int | float | None:
    if value is None:
        return None
    as_fraction = Fraction(value)
    if as_fraction.denominator == 1:
        return as_fraction.numerator
    return float(format(float(as_fraction), f".{SIGNIFICANT_DIGITS}g"))


@dataclass(frozen=True)
class StatsTable:
    """Formatted tabular summary: one row per year plus (metric, value) footer."""

    columns: tuple[str, ...]
    rows: list[tuple[str, ...]]
    footer: list[tuple[str, str]]


def model_to_table(model: BeamplotModel) -> StatsTable:
    rows = []
    for row in model.rows:
        if row.paper_count:
            rows.append(
                (
                    str(row.year),
                    str(row.paper_count),
                    format_number(row.min_value),
                    format_number(row.median_value),
                    format_number(row.max_value),
                )
            )
        else:
            rows.append((str(row.year), "0", "", "", ""))
    footer = [
        ("total_papers", str(model.total_papers)),
        ("h_index", str(model.h_index)),
        ("overall_value_median", format_number(model.overall_value_median)),
        ("overall_count_median", format_number(model.overall_count_median)),
        ("census_year", str(model.census_year)),
        ("mode", model.mode.value),
    ]
    return StatsTable(columns=("year", "count", "min", "median", "max"), rows=rows, footer=footer)


def table_to_csv(table: StatsTable) -> str:
    # Cells are numbers and fixed words, so plain comma joins are safe here.
    lines = [",".join(table.columns)]
    lines.extend(",".join(row) for row in table.rows)
    lines.append("")
    lines.append("metric,value")
    lines.extend(f"{name},{value}" for name, value in table.footer)
    return "\n".join(lines) + "\n"


def model_to_json_dict(model: BeamplotModel) -> dict:
    """Canonical JSON form; field names are stable for downstream consumers."""
    return {
        "census_year": model.census_year,
        "mode": model.mode.value,
        "total_papers": model.total_papers,
        "h_index": model.h_index,
        "overall_value_median": _json_number(model.overall_value_median),
        "overall_count_median": _json_number(model.overall_count_median),
        "rows": [
            {
                "year": row.year,
                "count": row.paper_count,
                "values": [_json_number(value) for value in row.values],
                "min": _json_number(row.min_value),
                "median": _json_number(row.median_value),
                "max": _json_number(row.max_value),
            }
            for row in model.rows
        ],
    }


def model_to_json(model: BeamplotModel) -> str:
    return json.dumps(model_to_json_dict(model), indent=2) + "\n"
