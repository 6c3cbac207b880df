"""Colored separation machinery.

Two colors: separation by a single hyperplane, its exact halfspace dual (whose
nonempty intersection encodes separability of subsets through a designated
point), and extraction of small inseparable subsets.  k colors: deciding
whether a family of hyperplanes can split the classes pairwise without cutting
any class, and — when it cannot — extracting a small subset that already
cannot be split, whose size is controlled by the transversal bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .counting import witness_size_bound
from .errors import DomainError, VerificationError
from .geometry import (
    Coords,
    Hyperplane,
    PointConfig,
    one_side_hyperplane,
    realize,
    strict_separate,
)
from .hdivision import hyperplane_division
from .linsolve import feasible_point
from .partitions import (
    Partition,
    is_transversal,
    minimalize_transversal,
    separating_members,
)


def _require_colors(config: PointConfig, most: Optional[int] = None) -> None:
    if config.colors is None:
        raise DomainError("this operation needs a colored configuration")
    if most is not None and config.k > most:
        raise DomainError(f"expected at most {most} colors, got {config.k}")


def color_separating_hyperplane(config: PointConfig) -> Optional[Hyperplane]:
    """A hyperplane with color class 0 in its positive open side and class 1 in
    its negative one, or None.  A single-colored configuration is trivially
    separable (one side simply stays empty)."""
    _require_colors(config, most=2)
    if config.k == 1:
        return one_side_hyperplane(config.points, config.dim)
    classes = config.color_classes
    side_a = [config.point(i) for i in classes[0]]
    side_b = [config.point(i) for i in classes[1]]
    return strict_separate(side_a, side_b, config.dim)


@dataclass(frozen=True)
class HalfspaceSystem:
    """The dual system of open halfspaces for a 2-colored configuration and a
    designated base point (translated to the origin).

    Writing candidate separating hyperplanes through-the-origin-free as
    normal . x = 1 in base-point coordinates, each other point contributes one
    open halfspace of admissible normals: points colored like the base must
    stay on its side (normal . a < 1), the rest must not (normal . a > 1).
    The system has a common point exactly when the configuration is separable
    along the colors — that is Helly's theorem territory, and deciding it
    exactly is a plain feasibility question.
    """

    config: PointConfig
    base_id: int
    rows: tuple[tuple[Coords, int, bool], ...]

    def common_point(self) -> Optional[tuple[Fraction, ...]]:
        return feasible_point(self.rows, self.config.dim)

    def separating_hyperplane(self) -> Optional[Hyperplane]:
        """Translate a common point back into a hyperplane with color class 0
        positive, class 1 negative (same contract as the direct oracle)."""
        lam = self.common_point()
        if lam is None:
            return None
        base = self.config.point(self.base_id)
        offset = 1 + sum(l * x for l, x in zip(lam, base.coords))
        plane = Hyperplane(lam, offset)  # base's class on the negative side
        if self.config.color_of(self.base_id) == 0:
            plane = Hyperplane(tuple(-x for x in plane.normal), -plane.offset)
        return plane


def helly_dual(config: PointConfig, base_id: int) -> HalfspaceSystem:
    _require_colors(config, most=2)
    base = config.point(base_id)
    base_color = config.color_of(base_id)
    rows = []
    for p in config.points:
        if p.id == base_id:
            continue
        shifted = tuple(x - b for x, b in zip(p.coords, base.coords))
        if config.color_of(p.id) == base_color:
            rows.append((shifted, 1, True))                      # normal . a < 1
        else:
            rows.append((tuple(-x for x in shifted), -1, True))  # normal . a > 1
    return HalfspaceSystem(config, base_id, tuple(rows))


def kirchberger_witness(config: PointConfig, base_id: int) -> Optional[tuple[int, ...]]:
    """None when the configuration is separable along its two colors; otherwise
    the first (smallest, then lexicographic) inseparable subset through the
    base point with at most dim+2 points.  Such a subset always exists for an
    inseparable configuration, so a fruitless search is an internal error."""
    _require_colors(config, most=2)
    config.point(base_id)
    if color_separating_hyperplane(config) is not None:
        return None
    others = [i for i in config.ids if i != base_id]
    for size in range(2, config.dim + 3):
        for combo in combinations(others, size - 1):
            ids = tuple(sorted((base_id,) + combo))
            if color_separating_hyperplane(config.subset(ids)) is None:
                return ids
    raise VerificationError(
        f"inseparable configuration admits no inseparable subset of size "
        f"<= {config.dim + 2} through {base_id}"
    )


def extend_partition(partition: Partition, config: PointConfig) -> Partition:
    """Blow a partition of one-point-per-color representatives up to the whole
    configuration: each block becomes the union of its members' color classes."""
    _require_colors(config)
    classes = config.color_classes
    rep_colors = [config.color_of(i) for i in sorted(partition.support)]
    if sorted(rep_colors) != sorted(classes):
        raise DomainError(
            "the partition support must pick exactly one point of every color"
        )
    blocks = []
    for block in partition.blocks:
        ids: list[int] = []
        for rep in block:
            ids.extend(classes[config.color_of(rep)])
        blocks.append(tuple(ids))
    return Partition(tuple(blocks))


@dataclass(frozen=True)
class Certificate:
    """Hyperplanes that pairwise split the color classes without cutting any.

    Each entry pairs a hyperplane with the partition it induces on the full
    configuration.  An empty family certifies configurations with at most one
    color."""

    family: tuple[tuple[Hyperplane, Partition], ...]

    def __len__(self) -> int:
        return len(self.family)


def validate_certificate(certificate: Certificate, config: PointConfig) -> None:
    """Re-check the three defining conditions with exact arithmetic."""
    _require_colors(config)
    classes = config.color_classes
    separated: set[tuple[int, int]] = set()
    for plane, partition in certificate.family:
        try:
            induced = realize(plane, config)  # rejects points on the plane
        except DomainError as err:
            raise VerificationError(f"certificate hyperplane is invalid: {err}") from err
        if induced != partition:
            raise VerificationError("certificate partition does not match its hyperplane")
        for color, ids in classes.items():
            blocks = {partition.block_of(i) for i in ids}
            if len(blocks) > 1:
                raise VerificationError(f"certificate hyperplane splits color {color}")
        for c1, c2 in combinations(sorted(classes), 2):
            if partition.separates(classes[c1][0], classes[c2][0]):
                separated.add((c1, c2))
    missing = set(combinations(sorted(classes), 2)) - separated
    if missing:
        raise VerificationError(f"color pairs never separated: {sorted(missing)}")


def is_partitionable(config: PointConfig) -> Optional[Certificate]:
    """Decide partitionability by searching, per color pair, for a two-sided
    grouping of all classes that a hyperplane can realize.

    A valid family member never cuts a class, so it assigns every class wholly
    to a side; conversely any such assignment realized by a hyperplane is a
    valid member.  Hence the configuration is partitionable exactly when every
    color pair admits a realizable grouping placing the two classes on opposite
    sides.  The collected hyperplanes are thinned greedily before returning.
    """
    _require_colors(config)
    classes = config.color_classes
    colors = sorted(classes)
    if len(colors) <= 1:
        return Certificate(())
    entries: list[tuple[Hyperplane, Partition, frozenset[tuple[int, int]]]] = []
    for c1, c2 in combinations(colors, 2):
        free = [c for c in colors if c not in (c1, c2)]
        found = None
        for mask in range(1 << len(free)):
            plus = {c1} | {c for t, c in enumerate(free) if not mask >> t & 1}
            side_a = [config.point(i) for c in sorted(plus) for i in classes[c]]
            side_b = [
                config.point(i)
                for c in colors
                if c not in plus
                for i in classes[c]
            ]
            plane = strict_separate(side_a, side_b, config.dim)
            if plane is not None:
                part = Partition(
                    (
                        tuple(p.id for p in side_a),
                        tuple(p.id for p in side_b),
                    )
                )
                covered = frozenset(
                    pair
                    for pair in combinations(colors, 2)
                    if (pair[0] in plus) != (pair[1] in plus)
                )
                found = (plane, part, covered)
                break
        if found is None:
            return None
        entries.append(found)

    # greedy cover: keep dropping to the entry that settles the most pairs
    uncovered = set(combinations(colors, 2))
    family = []
    while uncovered:
        best = max(entries, key=lambda e: len(e[2] & uncovered))
        gain = best[2] & uncovered
        if not gain:  # cannot happen: every pair got an entry covering it
            raise VerificationError("greedy cover stalled")
        family.append((best[0], best[1]))
        uncovered -= gain
    certificate = Certificate(tuple(family))
    validate_certificate(certificate, config)
    return certificate


def is_partitionable_by_enumeration(config: PointConfig) -> bool:
    """Independent route to the same decision: enumerate every realizable
    partition, keep those that respect the coloring, and ask whether the kept
    ones separate every color pair."""
    _require_colors(config)
    classes = config.color_classes
    colors = sorted(classes)
    if len(colors) <= 1:
        return True
    respecting = []
    for member in hyperplane_division(config).members:
        if all(
            len({member.block_of(i) for i in ids}) == 1 for ids in classes.values()
        ):
            respecting.append(member)
    return all(
        any(m.separates(classes[c1][0], classes[c2][0]) for m in respecting)
        for c1, c2 in combinations(colors, 2)
    )


@dataclass(frozen=True)
class WitnessReport:
    """A small non-partitionable subset, with the bookkeeping of its extraction."""

    witness_ids: tuple[int, ...]
    representatives: tuple[int, ...]
    transversal: tuple[Partition, ...]
    transversal_pairs: tuple[tuple[int, int], ...]
    per_member_sets: dict[Partition, tuple[int, ...]]
    size_bound: int


def witness_nonpartitionable(config: PointConfig) -> WitnessReport:
    """Extract a non-partitionable subset of at most (d+1)*eta + k points from a
    non-partitionable configuration.

    Take the lowest-id representative of each color; every realizable partition
    of the representatives whose color-class extension is NOT realizable on the
    whole configuration joins a blocking set, which must be a transversal of
    the representatives' division (otherwise the complementary members would
    partition the configuration).  Minimalize it, then replace each remaining
    member by a small inseparable core of its extension.  Every postcondition
    is re-checked; failures are bugs, not inputs.
    """
    _require_colors(config)
    if config.k < 2:
        raise DomainError("need at least two colors")
    if is_partitionable(config) is not None:
        raise DomainError("the configuration is partitionable; no witness exists")
    classes = config.color_classes
    reps = tuple(min(ids) for _, ids in sorted(classes.items()))
    rep_div = hyperplane_division(config.subset(reps))
    blocking = []
    extensions: dict[Partition, Partition] = {}
    for member in rep_div.members:
        if member.is_trivial:
            continue  # extends to the trivial partition, always realizable
        extended = extend_partition(member, config)
        extensions[member] = extended
        one, other = extended.blocks
        if (
            strict_separate(
                [config.point(i) for i in one],
                [config.point(i) for i in other],
                config.dim,
            )
            is None
        ):
            blocking.append(member)
    if not is_transversal(rep_div.division, blocking):
        raise VerificationError(
            "non-extendable members fail to hit every full subdivision"
        )
    minimal = minimalize_transversal(rep_div.division, blocking)
    pairs = tuple(
        (a, b)
        for a, b in combinations(sorted(reps), 2)
        if set(separating_members(rep_div.division, a, b)) == set(minimal)
    )
    if not pairs:
        raise VerificationError("minimal transversal is not a separating set of a pair")

    rep_set = set(reps)
    cores: dict[Partition, tuple[int, ...]] = {}
    for member in minimal:
        extended = extensions[member]
        side_labels = {
            i: (0 if i in frozenset(extended.blocks[0]) else 1) for i in config.ids
        }
        cores[member] = _inseparable_core(config, side_labels, rep_set)

    witness = tuple(sorted(rep_set.union(*cores.values())))
    bound = witness_size_bound(config.dim, config.k)
    if len(witness) > bound:
        raise VerificationError(f"witness has {len(witness)} points, bound is {bound}")
    if is_partitionable(config.subset(witness)) is not None:
        raise VerificationError("extracted witness is partitionable")
    return WitnessReport(
        witness_ids=witness,
        representatives=reps,
        transversal=minimal,
        transversal_pairs=pairs,
        per_member_sets=cores,
        size_bound=bound,
    )


def _inseparable_core(
    config: PointConfig, side_labels: dict[int, int], rep_set: set[int]
) -> tuple[int, ...]:
    """Smallest-first subset meeting the representatives that cannot be split
    according to the given two-sided labels."""
    ids = config.ids
    for size in range(2, config.dim + 3):
        for combo in combinations(ids, size):
            if rep_set.isdisjoint(combo):
                continue
            sub = config.subset(combo).with_colors(
                tuple(side_labels[i] for i in sorted(combo))
            )
            if color_separating_hyperplane(sub) is None:
                return combo
    raise VerificationError(
        f"no inseparable core of size <= {config.dim + 2} meets the representatives"
    )


@dataclass(frozen=True)
class InstanceReport:
    partitionable: bool
    certificate: Optional[Certificate]
    witness: Optional[WitnessReport]
    size_bound: Optional[int]


def verify_instance(config: PointConfig) -> InstanceReport:
    """Run the partition-or-small-witness dichotomy on one colored configuration.

    Either a certificate family exists, or a non-partitionable subset within
    the size bound is produced and re-verified.  Any third outcome raises."""
    _require_colors(config)
    bound = witness_size_bound(config.dim, config.k) if config.k >= 2 else None
    certificate = is_partitionable(config)
    if certificate is not None:
        return InstanceReport(True, certificate, None, bound)
    report = witness_nonpartitionable(config)
    return InstanceReport(False, None, report, bound)
