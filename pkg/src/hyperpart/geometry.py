"""Exact geometric primitives.

Points carry rational coordinates; all predicates (orientation, general
position, strict separability) are decided with exact arithmetic, so there is
no epsilon anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Optional, Sequence, Union

from .errors import DomainError, InvalidConfig
from .linsolve import feasible_point
from .partitions import Partition

Coords = tuple[Fraction, ...]
Scalar = Union[int, str, Fraction]


def as_coords(values: Iterable[Scalar]) -> Coords:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class Point:
    id: int
    coords: Coords

    def __post_init__(self) -> None:
        if not isinstance(self.id, int) or self.id < 0:
            raise InvalidConfig(f"point id must be a nonnegative integer, got {self.id!r}")
        object.__setattr__(self, "coords", as_coords(self.coords))
        if not self.coords:
            raise InvalidConfig(f"point {self.id} has no coordinates")

    @property
    def dim(self) -> int:
        return len(self.coords)


@dataclass(frozen=True)
class Hyperplane:
    """Oriented hyperplane {x : normal . x = offset} with open sides.

    The positive side is {x : normal . x > offset}, the negative side the
    opposite open halfspace.
    """

    normal: Coords
    offset: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "normal", as_coords(self.normal))
        object.__setattr__(self, "offset", Fraction(self.offset))
        if not any(self.normal):
            raise InvalidConfig("hyperplane normal must be nonzero")

    @property
    def dim(self) -> int:
        return len(self.normal)

    def value_at(self, at: "Point | Sequence[Scalar]") -> Fraction:
        coords = at.coords if isinstance(at, Point) else at
        if len(coords) != self.dim:
            raise DomainError(f"expected {self.dim} coordinates, got {len(coords)}")
        return sum((n * Fraction(x) for n, x in zip(self.normal, coords)), -self.offset)

    def side_of(self, at: "Point | Sequence[Scalar]") -> int:
        v = self.value_at(at)
        return (v > 0) - (v < 0)


@dataclass(frozen=True)
class PointConfig:
    """A finite labeled point set in R^dim, optionally colored.

    ``colors`` is aligned with ``points`` (which are kept sorted by id) and is
    always stored in canonical form: color ids are consecutive integers
    starting at 0, numbered by first appearance in id order.  Constructing a
    config therefore relabels any coloring it is given; color *classes* are
    preserved, labels are not.
    """

    dim: int
    points: tuple[Point, ...]
    colors: Optional[tuple[int, ...]] = None

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise InvalidConfig(f"dimension must be positive, got {self.dim}")
        pts = tuple(sorted(self.points, key=lambda p: p.id))
        if not pts:
            raise InvalidConfig("a point configuration must contain at least one point")
        object.__setattr__(self, "points", pts)
        for p in pts:
            if p.dim != self.dim:
                raise InvalidConfig(
                    f"point {p.id} has {p.dim} coordinates in a {self.dim}-dimensional config"
                )
        ids = [p.id for p in pts]
        if len(set(ids)) != len(ids):
            dup = sorted({i for i in ids if ids.count(i) > 1})
            raise InvalidConfig(f"duplicate point ids: {dup}")
        seen: dict[Coords, int] = {}
        for p in pts:
            if p.coords in seen:
                raise InvalidConfig(
                    f"points {seen[p.coords]} and {p.id} share coordinates"
                )
            seen[p.coords] = p.id
        if self.colors is not None:
            cols = tuple(self.colors)
            if len(cols) != len(pts):
                raise InvalidConfig(
                    f"{len(cols)} colors given for {len(pts)} points"
                )
            relabel: dict[object, int] = {}
            for c in cols:
                if c not in relabel:
                    relabel[c] = len(relabel)
            object.__setattr__(self, "colors", tuple(relabel[c] for c in cols))

    def __len__(self) -> int:
        return len(self.points)

    @cached_property
    def ids(self) -> tuple[int, ...]:
        return tuple(p.id for p in self.points)

    @cached_property
    def _by_id(self) -> dict[int, Point]:
        return {p.id: p for p in self.points}

    def point(self, id: int) -> Point:
        try:
            return self._by_id[id]
        except KeyError:
            raise DomainError(f"no point with id {id}") from None

    def __contains__(self, id: int) -> bool:
        return id in self._by_id

    @property
    def k(self) -> int:
        """Number of distinct colors (0 when uncolored)."""
        return 0 if self.colors is None else len(set(self.colors))

    @cached_property
    def _color_by_id(self) -> dict[int, int]:
        return {} if self.colors is None else dict(zip(self.ids, self.colors))

    def color_of(self, id: int) -> int:
        if self.colors is None:
            raise DomainError("configuration carries no coloring")
        return self._color_by_id[self.point(id).id]

    @cached_property
    def color_classes(self) -> dict[int, tuple[int, ...]]:
        if self.colors is None:
            raise DomainError("configuration carries no coloring")
        classes: dict[int, list[int]] = {}
        for p, c in zip(self.points, self.colors):
            classes.setdefault(c, []).append(p.id)
        return {c: tuple(ids) for c, ids in sorted(classes.items())}

    def subset(self, ids: Iterable[int]) -> "PointConfig":
        """Restriction to the given ids (colors relabeled canonically)."""
        wanted = set(ids)
        missing = wanted - set(self.ids)
        if missing:
            raise DomainError(f"ids not in configuration: {sorted(missing)}")
        if not wanted:
            raise DomainError("cannot restrict to an empty id set")
        pts = tuple(p for p in self.points if p.id in wanted)
        cols = None
        if self.colors is not None:
            cols = tuple(c for p, c in zip(self.points, self.colors) if p.id in wanted)
        return PointConfig(self.dim, pts, cols)

    def with_colors(self, labels: Sequence[object]) -> "PointConfig":
        return PointConfig(self.dim, self.points, tuple(labels))  # type: ignore[arg-type]

    def without_colors(self) -> "PointConfig":
        return PointConfig(self.dim, self.points, None)

    def translate(self, vector: Sequence[Scalar]) -> "PointConfig":
        v = as_coords(vector)
        if len(v) != self.dim:
            raise DomainError(f"translation vector has length {len(v)}, expected {self.dim}")
        pts = tuple(
            Point(p.id, tuple(x + dx for x, dx in zip(p.coords, v))) for p in self.points
        )
        return PointConfig(self.dim, pts, self.colors)


def make_config(
    dim: int,
    coords: Union[Sequence[Sequence[Scalar]], Mapping[int, Sequence[Scalar]]],
    colors: Optional[Union[Sequence[object], Mapping[int, object]]] = None,
) -> PointConfig:
    """Convenience builder: ids are list positions unless a mapping is given."""
    if isinstance(coords, Mapping):
        pts = tuple(Point(i, as_coords(c)) for i, c in sorted(coords.items()))
    else:
        pts = tuple(Point(i, as_coords(c)) for i, c in enumerate(coords))
    cols: Optional[tuple[object, ...]] = None
    if colors is not None:
        if isinstance(colors, Mapping):
            if set(colors) != {p.id for p in pts}:
                raise InvalidConfig("coloring must assign a color to every point id")
            cols = tuple(colors[p.id] for p in pts)
        else:
            cols = tuple(colors)
    return PointConfig(dim, pts, cols)  # type: ignore[arg-type]


def _det_sign(rows: list[list[Fraction]]) -> int:
    """Sign of the determinant of a square matrix, by fraction-exact elimination."""
    n = len(rows)
    sign = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            sign = -sign
        lead = rows[col][col]
        if lead < 0:
            sign = -sign
        for r in range(col + 1, n):
            factor = rows[r][col] / lead
            if factor:
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return sign


def orient(points: Sequence[Point], dim: int) -> int:
    """Orientation sign of dim+1 points: 0 iff they lie on a common hyperplane."""
    if len(points) != dim + 1:
        raise DomainError(f"orientation in dimension {dim} needs {dim + 1} points, got {len(points)}")
    for p in points:
        if p.dim != dim:
            raise DomainError(f"point {p.id} has dimension {p.dim}, expected {dim}")
    base = points[0].coords
    rows = [[x - b for x, b in zip(p.coords, base)] for p in points[1:]]
    return _det_sign(rows)


def general_position(config: PointConfig) -> bool:
    """True iff no dim+1 points lie on a common hyperplane."""
    d = config.dim
    return all(orient(sub, d) != 0 for sub in combinations(config.points, d + 1))


def strict_separate(
    side_a: Iterable[Point], side_b: Iterable[Point], dim: int
) -> Optional[Hyperplane]:
    """A hyperplane with side_a strictly positive and side_b strictly negative.

    Decided exactly: feasibility of {normal.a >= offset+1, normal.b <= offset-1},
    which by positive scaling is equivalent to the open conditions.  Returns
    None when the convex hulls meet.
    """
    a_pts = tuple(side_a)
    b_pts = tuple(side_b)
    if not a_pts or not b_pts:
        raise DomainError("strict separation needs two nonempty sides")
    for p in a_pts + b_pts:
        if p.dim != dim:
            raise DomainError(f"point {p.id} has dimension {p.dim}, expected {dim}")
    if {p.coords for p in a_pts} & {p.coords for p in b_pts}:
        raise DomainError("sides share a coordinate vector")
    constraints = []
    for p in a_pts:  # -normal.a + offset <= -1
        constraints.append((tuple(-x for x in p.coords) + (Fraction(1),), -1, False))
    for p in b_pts:  # normal.b - offset <= -1
        constraints.append((p.coords + (Fraction(-1),), -1, False))
    solution = feasible_point(constraints, dim + 1)
    if solution is None:
        return None
    return Hyperplane(solution[:dim], solution[dim])


def one_side_hyperplane(points: Iterable[Point], dim: int) -> Hyperplane:
    """A hyperplane with every given point strictly on its positive side."""
    pts = tuple(points)
    if not pts:
        raise DomainError("need at least one point")
    lowest = min(p.coords[0] for p in pts)
    normal = (Fraction(1),) + (Fraction(0),) * (dim - 1)
    return Hyperplane(normal, lowest - 1)


def realize(hyperplane: Hyperplane, config: PointConfig) -> Partition:
    """The partition of the config into the hyperplane's two open sides.

    An empty side is dropped, so a hyperplane with the whole config on one side
    realizes the trivial partition.  A point lying exactly on the hyperplane is
    rejected: sides are open.
    """
    if hyperplane.dim != config.dim:
        raise DomainError(
            f"hyperplane has dimension {hyperplane.dim}, config {config.dim}"
        )
    plus, minus = [], []
    for p in config.points:
        s = hyperplane.side_of(p.coords)
        if s == 0:
            raise DomainError(f"point {p.id} lies on the hyperplane")
        (plus if s > 0 else minus).append(p.id)
    return Partition(tuple(tuple(side) for side in (plus, minus) if side))
