"""Partitions, divisions, fullness, and transversal structure."""

from __future__ import annotations

from itertools import combinations

import pytest

import oracles
from hyperpart import (
    CampaignSpec,
    Division,
    DomainError,
    InvalidConfig,
    Partition,
    generate_instance,
    hyperplane_division,
    is_full,
    is_transversal,
    minimal_transversals,
    minimalize_transversal,
    nonseparating_members,
    restrict,
    separating_members,
)


def test_partition_canonical_form():
    p = Partition(((5, 3), (1,), (2, 4)))
    assert p.blocks == ((1,), (2, 4), (3, 5))
    assert p.support == {1, 2, 3, 4, 5}
    assert Partition(((3, 5), (4, 2), (1,))) == p


def test_partition_rejects_overlap_and_empty():
    with pytest.raises(InvalidConfig):
        Partition(((1, 2), (2, 3)))
    with pytest.raises(InvalidConfig):
        Partition(((1,), ()))
    with pytest.raises(InvalidConfig):
        Partition(())


def test_separates():
    p = Partition(((1, 2), (3,)))
    assert p.separates(1, 3)
    assert not p.separates(1, 2)
    with pytest.raises(DomainError):
        p.separates(1, 1)
    with pytest.raises(DomainError):
        p.separates(1, 9)


def test_trivial_and_block_of():
    p = Partition(((7, 8),))
    assert p.is_trivial
    assert p.block_of(8) == (7, 8)
    with pytest.raises(DomainError):
        p.block_of(1)


def test_restrict():
    p = Partition(((1, 2), (3, 4)))
    assert restrict(p, [1, 3]).blocks == ((1,), (3,))
    assert restrict(p, [1, 2]).blocks == ((1, 2),)
    with pytest.raises(DomainError):
        restrict(p, [9])
    with pytest.raises(DomainError):
        restrict(p, [])


def test_division_dedups_and_checks_support():
    a = Partition(((1,), (2,)))
    b = Partition(((2,), (1,)))
    d = Division(frozenset({1, 2}), (a, b))
    assert len(d) == 1
    with pytest.raises(InvalidConfig):
        Division(frozenset({1, 2}), (Partition(((1,), (3,))),))


def test_fullness():
    trivial = Partition(((1, 2, 3),))
    split12 = Partition(((1,), (2, 3)))
    split13 = Partition(((2,), (1, 3)))
    split23 = Partition(((3,), (1, 2)))
    assert not is_full(Division(frozenset({1, 2, 3}), (trivial, split12)))
    assert is_full(Division(frozenset({1, 2, 3}), (split12, split13, split23)))


def test_separating_members(quad):
    division = hyperplane_division(quad).division
    sep = separating_members(division, 0, 1)
    nonsep = nonseparating_members(division, 0, 1)
    assert len(sep) + len(nonsep) == len(division)
    assert all(m.separates(0, 1) for m in sep)
    assert all(not m.separates(0, 1) for m in nonsep)
    with pytest.raises(DomainError):
        separating_members(division, 0, 0)


def test_is_transversal_needs_full_division():
    trivial = Partition(((1, 2),))
    d = Division(frozenset({1, 2}), (trivial,))
    with pytest.raises(DomainError):
        is_transversal(d, ())


def test_is_transversal_rejects_foreign_members(quad):
    division = hyperplane_division(quad).division
    crossing = Partition(((0, 2), (1, 3)))  # the diagonals intersect
    assert crossing not in division
    with pytest.raises(DomainError):
        is_transversal(division, (crossing,))


def test_transversal_agrees_with_brute_force(quad):
    division = hyperplane_division(quad).division
    masks = oracles.full_subfamily_masks(division)
    for r in range(len(division) + 1):
        for subset in combinations(division.members, r):
            assert is_transversal(division, subset) == oracles.brute_is_transversal(
                division, subset, masks
            ), subset


def test_minimalize_transversal(quad):
    division = hyperplane_division(quad).division
    whole = minimalize_transversal(division, division.members)
    assert is_transversal(division, whole)
    # inclusion-minimal: no member can still be dropped
    for member in whole:
        assert not is_transversal(division, set(whole) - {member})
    with pytest.raises(DomainError):
        minimalize_transversal(division, ())


def test_minimal_transversals_structure(quad):
    division = hyperplane_division(quad).division
    found = minimal_transversals(division)
    assert found == tuple(sorted(found, key=lambda t: (t.size, t.pair)))
    sets = [frozenset(t.members) for t in found]
    for s in sets:
        assert is_transversal(division, s)
    for s, t in combinations(sets, 2):
        assert not s < t and not t < s
    # every minimal transversal is the separating set of its tagged pair
    for t in found:
        assert frozenset(separating_members(division, *t.pair)) == frozenset(t.members)


@pytest.mark.parametrize("dim,n,seed", [(1, 5, 21), (2, 5, 22), (2, 6, 23), (3, 5, 24)])
def test_pair_separating_sets_are_transversals(dim, n, seed):
    spec = CampaignSpec(suite="parts", dim=dim, n=n, trials=1, seed=seed)
    division = hyperplane_division(generate_instance(spec)).division
    for a, b in combinations(sorted(division.support), 2):
        assert is_transversal(division, separating_members(division, a, b))
