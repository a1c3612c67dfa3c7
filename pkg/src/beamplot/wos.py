"""Parser for Web of Science tab-delimited export files.

Handles the "Tab-delimited (Win, UTF-8)" download format: UTF-8 text with an
optional leading byte-order mark, LF or CRLF record separators, and tab
(0x09) field separators.  The first non-blank line is a header of WoS field
tags (PT, AU, TI, SO, DT, PY, TC, UT, ...); column order is taken from the
header, never assumed.  There is no quoting or escape layer in this format,
so fields are split on tabs only.

Only three tags are required: PY (publication year), TC (Core Collection
times cited) and UT (accession number).  Rows with a missing or invalid
value in any of them are skipped, never fatal; each skip produces a
structured warning.  Warning codes:

    INVALID_PY    year is not a plausible integer (digits, >= 1500)
    FUTURE_YEAR   year lies after the census year (early-access records)
    INVALID_TC    times-cited is not a non-negative integer
    MISSING_UT    accession number cell is empty
    DUPLICATE_UT  accession number already seen in this file (first row wins)
    EXTRA_FIELDS  row has more cells than the header (row is kept)

Checks run in the order listed above; a skipped row reports the first
failing check only.
"""

from __future__ import annotations

import datetime
import re
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

REQUIRED_TAGS = ("PY", "TC", "UT")

# Publication years this far back are treated as corrupt cells, not data.
MIN_PLAUSIBLE_YEAR = 1500

_DIGITS = re.compile(r"[0-9]+\Z")


class WosExportError(ValueError):
    """The export file as a whole cannot be parsed."""


class EmptyInputError(WosExportError):
    """No header line found (empty file or blank lines only)."""


class MissingRequiredColumnsError(WosExportError):
    """Header lacks one of the PY, TC or UT field tags."""


class MalformedEncodingError(WosExportError):
    """Input bytes are not valid UTF-8."""


class ParseWarning(NamedTuple):
    line: int
    code: str
    message: str


class SkippedLine(NamedTuple):
    line: int
    reason: str


@dataclass(frozen=True)
class PublicationRecord:
    """One publication from a WoS export.

    ``ut`` (accession number), ``pub_year`` and ``times_cited`` drive all
    statistics; the remaining fields are descriptive only and default to
    empty when the export does not carry them.
    """

    ut: str
    pub_year: int
    times_cited: int
    title: str = ""
    authors: tuple[str, ...] = ()
    source: str = ""
    doc_type: str = ""


@dataclass
class ParseReport:
    """Per-file ingestion diagnostics; kept + skipped always equals read."""

    records_read: int = 0
    records_kept: int = 0
    warnings: list[ParseWarning] = field(default_factory=list)
    skipped: list[SkippedLine] = field(default_factory=list)


def parse_wos_export(
    data: bytes, census_year: int | None = None
) -> tuple[list[PublicationRecord], ParseReport]:
    """Parse one export file body into records plus a diagnostics report.

    ``census_year`` bounds acceptable publication years (records dated
    after it are skipped as FUTURE_YEAR); it defaults to the current
    calendar year, so tests and reproducible pipelines should pin it.
    Raises a :class:`WosExportError` subclass when the file as a whole is
    unusable; per-row problems are reported, not raised.
    """
    if census_year is None:
        census_year = datetime.date.today().year

    try:
        text = data.decode("utf-8-sig")
    except UnicodeDecodeError as exc:
        raise MalformedEncodingError(f"input is not valid UTF-8: {exc}") from exc

    # The format pins record separators to LF or CRLF, so split manually
    # instead of str.splitlines (which also breaks on FF, VT, U+2028, ...).
    lines = [line[:-1] if line.endswith("\r") else line for line in text.split("\n")]

    numbered = [(no, line) for no, line in enumerate(lines, start=1) if line.strip()]
    if not numbered:
        raise EmptyInputError("no header line: input contains no non-blank lines")

    _, header = numbered[0]
    tags = [tag.strip() for tag in header.split("\t")]
    missing = [tag for tag in REQUIRED_TAGS if tag not in tags]
    if missing:
        raise MissingRequiredColumnsError(
            f"header lacks required column(s) {', '.join(missing)}; got: {', '.join(tags)}"
        )
    columns = {}
    for index, tag in enumerate(tags):
        columns.setdefault(tag, index)

    report = ParseReport()
    records: list[PublicationRecord] = []
    seen_uts: set[str] = set()

    def cell(fields: list[str], tag: str) -> str:
        index = columns.get(tag)
        if index is None or index >= len(fields):
            return ""
        return fields[index].strip()

    def skip(line_no: int, code: str, message: str) -> None:
        report.warnings.append(ParseWarning(line_no, code, message))
        report.skipped.append(SkippedLine(line_no, code))

    for line_no, line in numbered[1:]:
        report.records_read += 1
        fields = line.split("\t")
        if len(fields) > len(tags):
            report.warnings.append(
                ParseWarning(
                    line_no,
                    "EXTRA_FIELDS",
                    f"row has {len(fields)} cells but header has {len(tags)}; extras ignored",
                )
            )

        py_text = cell(fields, "PY")
        tc_text = cell(fields, "TC")
        ut = cell(fields, "UT")

        if not _DIGITS.match(py_text) or int(py_text) < MIN_PLAUSIBLE_YEAR:
            skip(line_no, "INVALID_PY", f"publication year {py_text!r} is not a plausible year")
            continue
        pub_year = int(py_text)
        if pub_year > census_year:
            skip(
                line_no,
                "FUTURE_YEAR",
                f"publication year {pub_year} lies after census year {census_year}",
            )
            continue
        if not _DIGITS.match(tc_text):
            skip(line_no, "INVALID_TC", f"times-cited {tc_text!r} is not a non-negative integer")
            continue
        if not ut:
            skip(line_no, "MISSING_UT", "accession number (UT) is empty")
            continue
        if ut in seen_uts:
            skip(line_no, "DUPLICATE_UT", f"accession number {ut!r} already seen; first row kept")
            continue

        seen_uts.add(ut)
        authors = tuple(a.strip() for a in cell(fields, "AU").split(";") if a.strip())
        records.append(
            PublicationRecord(
                ut=ut,
                pub_year=pub_year,
                times_cited=int(tc_text),
                title=cell(fields, "TI"),
                authors=authors,
                source=cell(fields, "SO"),
                doc_type=cell(fields, "DT"),
            )
        )
        report.records_kept += 1

    return records, report


def merge_datasets(sets: Iterable[Iterable[PublicationRecord]]) -> list[PublicationRecord]:
    """Union several record lists, resolving duplicate accession numbers.

    WoS caps the rows per download, so a full publication list often spans
    several export files.  When the same UT appears more than once the
    record with the larger times-cited count wins (exports made at
    different times); exact ties fall back to comparing the remaining
    fields, so the outcome never depends on input order.  The result is
    ordered by (pub_year, ut).
    """

    def precedence(r: PublicationRecord):
        return (r.times_cited, r.pub_year, r.title, r.source, r.doc_type, r.authors)

    by_ut: dict[str, PublicationRecord] = {}
    for records in sets:
        for record in records:
            kept = by_ut.get(record.ut)
            if kept is None or precedence(record) > precedence(kept):
                by_ut[record.ut] = record
    return sorted(by_ut.values(), key=lambda r: (r.pub_year, r.ut))


def record_to_dict(record: PublicationRecord) -> dict:
    return {
        "ut": record.ut,
        "pub_year": record.pub_year,
        "times_cited": record.times_cited,
        "title": record.title,
        "authors": list(record.authors),
        "source": record.source,
        "doc_type": record.doc_type,
    }


def report_to_dict(report: ParseReport) -> dict:
    return {
        "records_read": report.records_read,
        "records_kept": report.records_kept,
        "warnings": [
            {"line": w.line, "code": w.code, "message": w.message} for w in report.warnings
        ],
        "skipped": [{"line": s.line, "reason": s.reason} for s in report.skipped],
    }
