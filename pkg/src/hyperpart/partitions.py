"""Partitions of finite id sets, divisions, fullness, and transversals.

Everything here is pure combinatorics over point ids; geometry enters only
through which divisions get built.  Partitions and divisions are kept in a
canonical order (blocks sorted by least id, members sorted by block tuples) so
that structural equality is set equality and every scan is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .errors import DomainError, InvalidConfig


@dataclass(frozen=True)
class Partition:
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        canon = []
        for block in self.blocks:
            ids = tuple(sorted(set(block)))
            if not ids:
                raise InvalidConfig("partition blocks must be nonempty")
            canon.append(ids)
        if not canon:
            raise InvalidConfig("a partition needs at least one block")
        canon.sort(key=lambda b: b[0])
        seen: set[int] = set()
        for block in canon:
            for x in block:
                if x in seen:
                    raise InvalidConfig(f"id {x} appears in two blocks")
                seen.add(x)
        object.__setattr__(self, "blocks", tuple(canon))

    @cached_property
    def support(self) -> frozenset[int]:
        return frozenset(x for block in self.blocks for x in block)

    @cached_property
    def _block_index(self) -> dict[int, int]:
        return {x: i for i, block in enumerate(self.blocks) for x in block}

    @property
    def is_trivial(self) -> bool:
        return len(self.blocks) == 1

    def block_of(self, id: int) -> tuple[int, ...]:
        try:
            return self.blocks[self._block_index[id]]
        except KeyError:
            raise DomainError(f"id {id} is not in the partition support") from None

    def separates(self, a: int, b: int) -> bool:
        if a == b:
            raise DomainError("separation is defined for two distinct ids")
        idx = self._block_index
        if a not in idx or b not in idx:
            missing = [x for x in (a, b) if x not in idx]
            raise DomainError(f"ids not in the partition support: {missing}")
        return idx[a] != idx[b]

    def __repr__(self) -> str:
        inner = "|".join(",".join(str(x) for x in block) for block in self.blocks)
        return f"Partition[{inner}]"


def restrict(partition: Partition, ids: Iterable[int]) -> Partition:
    """Restriction to a nonempty subset of the support; empty traces vanish."""
    keep = frozenset(ids)
    if not keep:
        raise DomainError("cannot restrict to an empty set")
    if not keep <= partition.support:
        raise DomainError(f"ids not in the partition support: {sorted(keep - partition.support)}")
    blocks = [tuple(x for x in block if x in keep) for block in partition.blocks]
    return Partition(tuple(b for b in blocks if b))


@dataclass(frozen=True)
class Division:
    """A support set together with a deduplicated family of partitions of it."""

    support: frozenset[int]
    members: tuple[Partition, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "support", frozenset(self.support))
        if not self.support:
            raise InvalidConfig("a division needs a nonempty support")
        for member in self.members:
            if member.support != self.support:
                raise InvalidConfig(
                    f"member {member!r} has support {sorted(member.support)}, "
                    f"expected {sorted(self.support)}"
                )
        unique = sorted(set(self.members), key=lambda p: p.blocks)
        object.__setattr__(self, "members", tuple(unique))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, partition: Partition) -> bool:
        return partition in self._member_set

    @cached_property
    def _member_set(self) -> frozenset[Partition]:
        return frozenset(self.members)

    @cached_property
    def _full(self) -> bool:
        for a, b in combinations(sorted(self.support), 2):
            if not any(m.separates(a, b) for m in self.members):
                return False
        return True

    def drop(self, unwanted: Iterable[Partition]) -> "Division":
        gone = set(unwanted)
        return Division(self.support, tuple(m for m in self.members if m not in gone))


def is_full(division: Division) -> bool:
    """Every pair of distinct support ids is separated by some member."""
    return division._full


def separating_members(division: Division, a: int, b: int) -> tuple[Partition, ...]:
    _check_pair(division, a, b)
    return tuple(m for m in division.members if m.separates(a, b))


def nonseparating_members(division: Division, a: int, b: int) -> tuple[Partition, ...]:
    _check_pair(division, a, b)
    return tuple(m for m in division.members if not m.separates(a, b))


def _check_pair(division: Division, a: int, b: int) -> None:
    if a == b:
        raise DomainError("separation is defined for two distinct ids")
    missing = {a, b} - division.support
    if missing:
        raise DomainError(f"ids not in the division support: {sorted(missing)}")


def is_transversal(division: Division, subset: Iterable[Partition]) -> bool:
    """Does the subset meet every full subdivision?

    Equivalent complement test: the members NOT in the subset must fail to be
    full.  (A full complement is itself a full subdivision avoiding the subset;
    conversely any avoided full subdivision lives inside the complement and
    forces it full.)
    """
    chosen = set(subset)
    if not chosen <= division._member_set:
        raise DomainError("subset contains partitions outside the division")
    if not is_full(division):
        raise DomainError("transversals are defined for full divisions only")
    return not is_full(division.drop(chosen))


def minimalize_transversal(
    division: Division, transversal: Iterable[Partition]
) -> tuple[Partition, ...]:
    """Greedy descent to an inclusion-minimal transversal inside the given one.

    Members are scanned in canonical order; each is dropped when the rest still
    forms a transversal.  Because transversality is monotone under supersets,
    the result admits no removable member at all, i.e. it is inclusion-minimal.
    """
    chosen = set(transversal)
    if not is_transversal(division, chosen):
        raise DomainError("the given subset is not a transversal")
    for member in division.members:
        if member in chosen and is_transversal(division, chosen - {member}):
            chosen.remove(member)
    return tuple(m for m in division.members if m in chosen)


@dataclass(frozen=True)
class MinimalTransversal:
    pair: tuple[int, int]
    members: tuple[Partition, ...]

    @property
    def size(self) -> int:
        return len(self.members)


def minimal_transversals(division: Division) -> tuple[MinimalTransversal, ...]:
    """All inclusion-minimal transversals, each tagged with a realizing pair.

    The separating sets of pairs are always transversals, minimal transversals
    are separating sets of pairs, and a pair's set is a minimal transversal
    exactly when no other pair's set is properly contained in it — so the
    inclusion-minimal distinct separating sets are the answer.
    """
    if len(division.support) < 2:
        raise DomainError("minimal transversals need at least two support ids")
    if not is_full(division):
        raise DomainError("transversals are defined for full divisions only")
    by_set: dict[frozenset[Partition], tuple[int, int]] = {}
    for a, b in combinations(sorted(division.support), 2):
        key = frozenset(separating_members(division, a, b))
        by_set.setdefault(key, (a, b))
    found = []
    for key, pair in by_set.items():
        if not any(other < key for other in by_set):
            found.append(
                MinimalTransversal(pair, tuple(m for m in division.members if m in key))
            )
    found.sort(key=lambda t: (t.size, t.pair))
    return tuple(found)


def min_transversal_cardinality(division: Division) -> int:
    return min(t.size for t in minimal_transversals(division))


def max_transversal_cardinality(division: Division) -> int:
    return max(t.size for t in minimal_transversals(division))
