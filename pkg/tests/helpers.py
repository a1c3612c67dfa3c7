"""Shared test utilities: canonical parse snapshots and random datasets."""

from __future__ import annotations

import json
import random

from beamplot import PublicationRecord, WosExportError, parse_wos_export
from beamplot.wos import record_to_dict, report_to_dict

# Every corpus fixture is parsed against this pinned census year.
CORPUS_CENSUS_YEAR = 2020


def parse_snapshot(data: bytes, census_year: int = CORPUS_CENSUS_YEAR) -> str:
    """Canonical JSON view of a parse outcome, for bit-exact golden comparison."""
    try:
        records, report = parse_wos_export(data, census_year=census_year)
    except WosExportError as exc:
        doc = {"error": type(exc).__name__, "message": str(exc)}
    else:
        doc = {
            "records": [record_to_dict(r) for r in records],
            "report": report_to_dict(report),
        }
    return json.dumps(doc, indent=2) + "\n"


def random_records(
    rng: random.Random,
    max_papers: int = 40,
    year_lo: int = 1985,
    year_hi: int = 2020,
    max_cited: int = 400,
) -> list[PublicationRecord]:
    """A synthetic deduplicated dataset with unique accession numbers."""
    count = rng.randint(1, max_papers)
    return [
        PublicationRecord(
            ut=f"WOS:{index:015d}",
            pub_year=rng.randint(year_lo, year_hi),
            times_cited=rng.randint(0, max_cited),
        )
        for index in range(count)
    ]
