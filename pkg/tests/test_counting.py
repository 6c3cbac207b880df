"""Closed-form counts and the identities tying them together."""

from __future__ import annotations

import pytest

import oracles
from hyperpart import (
    DomainError,
    counting_summary,
    max_transversal_size,
    min_transversal_size,
    partition_count,
    witness_size_bound,
)


def test_line_counts_are_linear():
    # on a line there are exactly k-1 cuts plus the trivial partition
    for k in range(1, 10):
        assert partition_count(1, k) == k


def test_plane_small_values():
    assert partition_count(2, 3) == 4
    assert partition_count(2, 5) == 11
    assert partition_count(2, 6) == 16


def test_matches_recurrence_oracle():
    for dim in range(1, 4):
        for k in range(1, 13):
            assert partition_count(dim, k) == oracles.count_by_recurrence(dim, k)


def test_high_dimension_saturates():
    # once dim >= k-1 every bipartition is realizable
    assert partition_count(7, 5) == 2 ** 4
    assert partition_count(4, 5) == 2 ** 4


def test_min_max_values():
    assert min_transversal_size(2, 6) == 5
    assert max_transversal_size(2, 6) == 11
    assert min_transversal_size(1, 4) == 1
    assert max_transversal_size(1, 4) == 3


def test_sum_identity():
    # minimum plus maximum transversal size is the whole count
    for dim in range(1, 4):
        for k in range(2, 11):
            assert (
                min_transversal_size(dim, k) + max_transversal_size(dim, k)
                == partition_count(dim, k)
            )


def test_max_is_previous_count():
    # the largest minimal transversal has the size of the one-point-fewer count
    for dim in range(1, 4):
        for k in range(2, 11):
            assert max_transversal_size(dim, k) == partition_count(dim, k - 1)


def test_witness_size_bound_values():
    assert witness_size_bound(1, 2) == 4
    assert witness_size_bound(2, 3) == 9
    for dim in range(1, 4):
        for k in range(2, 9):
            assert (
                witness_size_bound(dim, k)
                == (dim + 1) * max_transversal_size(dim, k) + k
            )


def test_summary_is_consistent():
    s = counting_summary(2, 4)
    assert (s.dim, s.k) == (2, 4)
    assert s.partition_count == partition_count(2, 4)
    assert s.min_transversal_size == min_transversal_size(2, 4)
    assert s.max_transversal_size == max_transversal_size(2, 4)
    assert s.witness_size_bound == witness_size_bound(2, 4)


@pytest.mark.parametrize(
    "fn,least",
    [
        (partition_count, 1),
        (min_transversal_size, 2),
        (max_transversal_size, 2),
        (witness_size_bound, 2),
    ],
)
def test_domain_checks(fn, least):
    with pytest.raises(DomainError):
        fn(0, 3)
    with pytest.raises(DomainError):
        fn(2, least - 1)
