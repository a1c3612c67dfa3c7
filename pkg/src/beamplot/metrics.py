"""Scalar statistics for citation records: medians, h-index, age weighting.

Weighted citation values are kept as exact :class:`fractions.Fraction`
objects so that downstream CSV/JSON output is bit-reproducible; conversion
to floating point happens only when numbers are rendered.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, TYPE_CHECKING

if TYPE_CHECKING:
    from .wos import PublicationRecord

# Age difference at and beyond which the citation weight stops decreasing.
WEIGHT_CAP_YEARS = 10


class FutureYearError(ValueError):
    """A publication year lies after the census year."""


@dataclass(frozen=True)
class WeightingPolicy:
    """How citation counts are discounted by publication age.

    ``census_year`` is the calendar year up to which citations are counted;
    a paper's age is ``census_year - pub_year``.  ``cap`` is the age at
    which the weight saturates (defaults to the standard ten years and
    should only be overridden deliberately).
    """

    census_year: int
    cap: int = WEIGHT_CAP_YEARS


def age_weight(diff: int, cap: int = WEIGHT_CAP_YEARS) -> Fraction:
    """Weight applied to a citation count for an age difference of ``diff`` years.

    Returns the exact rational ``1 / (min(diff, cap) + 1)``: 1 for papers
    published in the census year, 1/2 one year back, and so on down to
    ``1 / (cap + 1)`` for anything ``cap`` or more years old.
    """
    if diff < 0:
        raise ValueError(f"age difference must be >= 0, got {diff}")
    return Fraction(1, min(diff, cap) + 1)


def weighted_citations(record: "PublicationRecord", policy: WeightingPolicy) -> Fraction:
    """Age-weighted citation value of one publication under ``policy``."""
    diff = policy.census_year - record.pub_year
    if diff < 0:
        raise FutureYearError(
            f"record {record.ut!r} published in {record.pub_year}, "
            f"after census year {policy.census_year}"
        )
    return record.times_cited * age_weight(diff, policy.cap)


def h_index(citation_counts: Iterable[int]) -> int:
    """Largest h such that at least h entries are >= h (0 for empty input)."""
    h = 0
    for rank, cited in enumerate(sorted(citation_counts, reverse=True), start=1):
        if cited < rank:
            break
        h = rank
    return h


def median(values: Sequence) -> int | Fraction:
    """Median of a non-empty sequence.

    Odd-length input returns the middle element unchanged; even-length
    input returns the exact mean of the two central elements as a
    Fraction.
    """
    if not values:
        raise ValueError("median of an empty sequence")
    ordered = sorted(values)
    mid = len(ordered) // 2
    if len(ordered) % 2:
        return ordered[mid]
    return (Fraction(ordered[mid - 1]) + Fraction(ordered[mid])) / 2
