from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from beamplot import (
    FutureYearError,
    PublicationRecord,
    WeightingPolicy,
    age_weight,
    h_index,
    median,
    weighted_citations,
)


def brute_force_h_index(counts):
    """Definitional oracle: largest h with at least h entries >= h."""
    return max(h for h in range(len(counts) + 1) if sum(c >= h for c in counts) >= h)


def sort_based_median(values):
    ordered = sorted(values)
    mid = len(ordered) // 2
    if len(ordered) % 2:
        return Fraction(ordered[mid])
    return Fraction(ordered[mid - 1] + ordered[mid], 2)


# --- age weighting -----------------------------------------------------------


@pytest.mark.parametrize(
    "diff,expected",
    [(0, Fraction(1)), (1, Fraction(1, 2)), (5, Fraction(1, 6)), (10, Fraction(1, 11))],
)
def test_weight_follows_harmonic_series(diff, expected):
    weight = age_weight(diff)
    assert weight == expected
    assert isinstance(weight, Fraction)


@pytest.mark.parametrize("diff", [10, 11, 25, 100])
def test_weight_saturates_at_ten_years(diff):
    assert age_weight(diff) == Fraction(1, 11)


def test_weight_decreases_strictly_before_the_cap():
    weights = [age_weight(d) for d in range(11)]
    assert all(earlier > later for earlier, later in zip(weights, weights[1:]))
    assert weights == [Fraction(1, d + 1) for d in range(11)]


def test_weight_rejects_negative_difference():
    with pytest.raises(ValueError):
        age_weight(-1)


@given(st.integers(min_value=0, max_value=500), st.integers(min_value=0, max_value=500))
def test_weight_is_non_increasing(a, b):
    lo, hi = sorted((a, b))
    assert age_weight(lo) >= age_weight(hi)


# --- weighted citations ------------------------------------------------------


def record(year, cited):
    return PublicationRecord(ut=f"WOS:{year}-{cited}", pub_year=year, times_cited=cited)


def test_zero_citations_weigh_zero():
    assert weighted_citations(record(1999, 0), WeightingPolicy(2020)) == 0


def test_census_year_paper_keeps_its_full_count():
    assert weighted_citations(record(2020, 22), WeightingPolicy(2020)) == 22


def test_ten_year_old_paper_is_divided_by_eleven():
    value = weighted_citations(record(2010, 33), WeightingPolicy(2020))
    assert value == Fraction(33, 11) == 3


def test_future_publication_year_is_rejected():
    with pytest.raises(FutureYearError):
        weighted_citations(record(2021, 5), WeightingPolicy(2020))


@given(st.integers(min_value=0, max_value=1000), st.integers(min_value=0, max_value=1000))
def test_weighted_value_is_monotone_in_citations(a, b):
    policy = WeightingPolicy(2020)
    lo, hi = sorted((a, b))
    assert weighted_citations(record(2015, lo), policy) <= weighted_citations(
        record(2015, hi), policy
    )


@given(st.integers(min_value=1900, max_value=2020), st.integers(min_value=1900, max_value=2020))
def test_weighted_value_never_grows_with_age(year_a, year_b):
    policy = WeightingPolicy(2020)
    older, newer = sorted((year_a, year_b))
    assert weighted_citations(record(older, 50), policy) <= weighted_citations(
        record(newer, 50), policy
    )


# --- h-index -----------------------------------------------------------------


@pytest.mark.parametrize(
    "counts,expected",
    [([], 0), ([1], 1), ([10, 8, 5, 4, 3], 4), ([0, 0, 0], 0)],
)
def test_h_index_examples(counts, expected):
    assert h_index(counts) == expected
    assert brute_force_h_index(counts) == expected


def test_h_index_matches_oracle_exhaustively_on_short_lists():
    from itertools import product

    for length in range(5):
        for counts in product(range(9), repeat=length):
            assert h_index(counts) == brute_force_h_index(counts), counts


@given(st.lists(st.integers(min_value=0, max_value=10_000), max_size=60))
def test_h_index_matches_oracle(counts):
    assert h_index(counts) == brute_force_h_index(counts)


@given(st.lists(st.integers(min_value=0, max_value=1000), min_size=1, max_size=50))
def test_h_index_bounds(counts):
    h = h_index(counts)
    assert 0 <= h <= len(counts)
    assert h <= max(counts)


@given(
    st.lists(st.integers(min_value=0, max_value=1000), max_size=50),
    st.integers(min_value=0, max_value=1000),
)
def test_appending_a_paper_never_lowers_h_index(counts, extra):
    assert h_index(counts + [extra]) >= h_index(counts)


@given(st.permutations(list(range(12))))
def test_h_index_ignores_order(counts):
    assert h_index(counts) == h_index(sorted(counts))


# --- median ------------------------------------------------------------------


@pytest.mark.parametrize("values,expected", [([5], 5), ([1, 3], 2), ([7, 1, 3], 3)])
def test_median_examples(values, expected):
    assert median(values) == expected


def test_median_of_empty_sequence_is_an_error():
    with pytest.raises(ValueError):
        median([])


def test_even_length_median_is_exact():
    assert median([1, 2]) == Fraction(3, 2)
    assert median([Fraction(1, 3), Fraction(1, 2)]) == Fraction(5, 12)


@given(st.lists(st.integers(min_value=-1000, max_value=1000), min_size=1, max_size=60))
def test_median_matches_sort_oracle_and_bounds(values):
    result = median(values)
    assert result == sort_based_median(values)
    assert min(values) <= result <= max(values)


@given(st.lists(st.integers(min_value=-1000, max_value=1000), min_size=1, max_size=30), st.randoms())
def test_median_ignores_order(values, rng):
    shuffled = list(values)
    rng.shuffle(shuffled)
    assert median(shuffled) == median(values)


@given(
    st.lists(
        st.fractions(min_value=0, max_value=100, max_denominator=11), min_size=1, max_size=40
    )
)
def test_median_is_exact_for_rationals(values):
    assert median(values) == sort_based_median(values)
