"""Points, hyperplanes, orientation, and strict separation."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from hyperpart import (
    DomainError,
    Hyperplane,
    InvalidConfig,
    Point,
    general_position,
    make_config,
    one_side_hyperplane,
    orient,
    realize,
    strict_separate,
)


def test_point_validation():
    with pytest.raises(InvalidConfig):
        Point(-1, (Fraction(0),))
    with pytest.raises(InvalidConfig):
        Point(0, ())


def test_hyperplane_needs_a_normal():
    with pytest.raises(InvalidConfig):
        Hyperplane((Fraction(0), Fraction(0)), Fraction(1))


def test_hyperplane_sides():
    h = Hyperplane((Fraction(1), Fraction(0)), Fraction(2))  # x = 2
    assert h.side_of(Point(0, (Fraction(3), Fraction(9)))) == 1
    assert h.side_of(Point(1, (Fraction(1), Fraction(-4)))) == -1
    assert h.side_of(Point(2, (Fraction(2), Fraction(5)))) == 0
    assert h.value_at(Point(0, (Fraction(3), Fraction(9)))) == 1


def test_orient_triangle():
    pts = [Point(0, (Fraction(0), Fraction(0))), Point(1, (Fraction(1), Fraction(0))),
           Point(2, (Fraction(0), Fraction(1)))]
    assert orient(pts, 2) == 1
    assert orient([pts[0], pts[2], pts[1]], 2) == -1


def test_orient_collinear_is_zero():
    pts = [Point(0, (Fraction(0), Fraction(0))), Point(1, (Fraction(1), Fraction(1))),
           Point(2, (Fraction(2), Fraction(2)))]
    assert orient(pts, 2) == 0


def test_general_position():
    assert general_position(make_config(2, [(0, 0), (1, 0), (0, 1), (2, 3)]))
    assert not general_position(make_config(2, [(0, 0), (1, 0), (2, 0), (0, 1)]))
    # fewer than d+1 points: vacuously in general position
    assert general_position(make_config(3, [(0, 0, 0), (1, 1, 1)]))


def test_config_rejects_duplicates():
    from hyperpart import PointConfig

    with pytest.raises(InvalidConfig):
        make_config(2, {0: (0, 0), 1: (0, 0)})  # coincident coordinates
    with pytest.raises(InvalidConfig):
        PointConfig(1, (Point(3, (Fraction(0),)), Point(3, (Fraction(1),))))
    with pytest.raises(InvalidConfig):
        make_config(2, [(0, 0), (1,)])  # wrong arity


def test_color_labels_become_dense_ids():
    cfg = make_config(1, [(0,), (1,), (2,)], colors=["blue", "red", "blue"])
    assert cfg.colors == (0, 1, 0)
    assert cfg.k == 2
    assert cfg.color_classes == {0: (0, 2), 1: (1,)}
    assert cfg.color_of(2) == 0


def test_partial_coloring_rejected():
    with pytest.raises(InvalidConfig):
        make_config(1, [(0,), (1,)], colors=["a"])


def test_subset_and_translate():
    cfg = make_config(2, {5: (0, 0), 9: (1, 1), 2: (2, 0)}, colors={5: "x", 9: "y", 2: "x"})
    sub = cfg.subset([9, 2])
    assert sub.ids == (2, 9)
    assert sub.k == 2
    moved = cfg.translate((Fraction(1), Fraction(-1)))
    assert moved.point(5).coords == (Fraction(1), Fraction(-1))
    assert moved.colors == cfg.colors


def test_strict_separate_margin():
    a = [Point(0, (Fraction(0), Fraction(0)))]
    b = [Point(1, (Fraction(3), Fraction(0)))]
    plane = strict_separate(a, b, 2)
    assert plane is not None
    assert plane.value_at(a[0]) >= 1
    assert plane.value_at(b[0]) <= -1


def test_strict_separate_infeasible_when_hulls_overlap():
    # b sits at the midpoint of the a-segment
    a = [Point(0, (Fraction(0),)), Point(1, (Fraction(2),))]
    b = [Point(2, (Fraction(1),))]
    assert strict_separate(a, b, 1) is None


def test_strict_separate_rejects_shared_coordinates():
    p = Point(0, (Fraction(1), Fraction(1)))
    q = Point(1, (Fraction(1), Fraction(1)))
    with pytest.raises(DomainError):
        strict_separate([p], [q], 2)


def test_one_side_hyperplane():
    cfg = make_config(2, [(0, 5), (-3, 2), (4, 1)])
    plane = one_side_hyperplane(cfg.points, cfg.dim)
    assert all(plane.side_of(p) == 1 for p in cfg.points)


def test_realize_round_trip(quad):
    plane = Hyperplane((Fraction(1), Fraction(0)), Fraction(1, 2))  # x = 1/2
    part = realize(plane, quad)
    assert part.blocks == ((0, 3), (1, 2))


def test_realize_rejects_points_on_the_plane(quad):
    through = Hyperplane((Fraction(1), Fraction(0)), Fraction(0))  # x = 0 hits id 0
    with pytest.raises(DomainError):
        realize(through, quad)


_coord = st.fractions(min_value=-4, max_value=4, max_denominator=3)


def _distinct_sides(draw_dim, na, nb):
    return st.tuples(
        st.lists(st.lists(_coord, min_size=draw_dim, max_size=draw_dim).map(tuple),
                 min_size=na, max_size=na, unique=True),
        st.lists(st.lists(_coord, min_size=draw_dim, max_size=draw_dim).map(tuple),
                 min_size=nb, max_size=nb, unique=True),
    )


@given(
    st.integers(min_value=1, max_value=2).flatmap(
        lambda d: st.tuples(st.just(d), _distinct_sides(d, 2, 2))
    )
)
def test_strict_separate_matches_hull_oracle(case):
    """Dual route: feasibility answer == sympy hull-disjointness answer."""
    dim, (side_a, side_b) = case
    if set(side_a) & set(side_b):
        return
    pa = [Point(i, c) for i, c in enumerate(side_a)]
    pb = [Point(100 + i, c) for i, c in enumerate(side_b)]
    mine = strict_separate(pa, pb, dim) is not None
    assert mine == oracles.strictly_separable(side_a, side_b)
    if dim == 1:
        assert mine == oracles.hulls_disjoint_1d(side_a, side_b)
