#!/usr/bin/env python3
"""Regenerate the committed golden files from the current implementation.

Run after an intentional output-format change, then review the diff by hand
before committing: the test suite treats these files as the ground truth.

    python3 scripts/regen_goldens.py
"""

from __future__ import annotations

import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "tests"))

from helpers import CORPUS_CENSUS_YEAR, parse_snapshot  # noqa: E402

from beamplot import (  # noqa: E402
    ValueMode,
    WeightingPolicy,
    build_model,
    merge_datasets,
    model_to_json,
    model_to_table,
    parse_wos_export,
    render_beamplot,
    table_to_csv,
)


def regen_corpus() -> None:
    corpus = REPO / "tests" / "corpus"
    for fixture in sorted(corpus.glob("*.txt")) + sorted(corpus.glob("*.bin")):
        snapshot = parse_snapshot(fixture.read_bytes(), CORPUS_CENSUS_YEAR)
        golden = fixture.with_suffix(fixture.suffix + ".expected.json")
        golden.write_bytes(snapshot.encode("utf-8"))
        print(f"wrote {golden.relative_to(REPO)}")


def regen_end_to_end() -> None:
    data = REPO / "tests" / "data"
    golden = data / "golden"
    golden.mkdir(exist_ok=True)
    policy = WeightingPolicy(census_year=CORPUS_CENSUS_YEAR)

    for stem in ("researcher_pair", "researcher_ten"):
        records, _ = parse_wos_export(
            (data / f"{stem}.txt").read_bytes(), census_year=CORPUS_CENSUS_YEAR
        )
        records = merge_datasets([records])
        model = build_model(records, ValueMode.RAW, policy)
        (golden / f"{stem}.svg").write_bytes(render_beamplot(model).encode("utf-8"))
        print(f"wrote tests/data/golden/{stem}.svg")
        if stem == "researcher_ten":
            (golden / f"{stem}_stats.csv").write_bytes(
                table_to_csv(model_to_table(model)).encode("utf-8")
            )
            (golden / f"{stem}_stats.json").write_bytes(model_to_json(model).encode("utf-8"))
            weighted = build_model(records, ValueMode.AGE_WEIGHTED, policy)
            (golden / f"{stem}_weighted_stats.csv").write_bytes(
                table_to_csv(model_to_table(weighted)).encode("utf-8")
            )
            print(f"wrote tests/data/golden/{stem}_stats.[csv|json] and weighted csv")


if __name__ == "__main__":
    regen_corpus()
    regen_end_to_end()
