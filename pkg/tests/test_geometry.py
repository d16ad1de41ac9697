import numpy as np
import pytest
from hypothesis import given, strategies as st

from bncm.geometry import (Orientation, convex_hull, dist2, orientation, point_in_triangle,
                           segments_disjoint)

coord = st.floats(-1e3, 1e3, allow_nan=False)
pt = st.tuples(coord, coord)


@pytest.mark.parametrize("p,q,r,expected", [
    ((0, 0), (1, 0), (0, 1), Orientation.CCW),
    ((0, 0), (1, 1), (2, 2), Orientation.COLLINEAR),
    ((0, 0), (0, 1), (1, 0), Orientation.CW),
])
def test_orientation_examples(p, q, r, expected):
    assert orientation(p, q, r) is expected


def test_orientation_near_degenerate_is_exact():
    # 0.1 steps are not representable; the float determinant is pure noise here
    p, q, r = (0.1, 0.1), (0.2, 0.2), (0.30000000000000004, 0.30000000000000004)
    from fractions import Fraction as F
    exact = (F(q[0]) - F(p[0])) * (F(r[1]) - F(p[1])) - (F(q[1]) - F(p[1])) * (F(r[0]) - F(p[0]))
    assert int(orientation(p, q, r)) == (exact > 0) - (exact < 0)


@given(pt, pt, pt)
def test_orientation_antisymmetric(p, q, r):
    o = orientation(p, q, r)
    assert orientation(q, p, r) == -o
    assert orientation(p, r, q) == -o
    assert orientation(q, r, p) == o


@pytest.mark.parametrize("s1,s2,expected", [
    (((0, 0), (1, 1)), ((0, 1), (1, 0)), False),
    (((0, 0), (1, 0)), ((2, 0), (3, 0)), True),
    (((0, 0), (1, 0)), ((1, 0), (2, 1)), False),
    (((0, 0), (2, 0)), ((1, 0), (1, 1)), False),   # T-contact
    (((0, 0), (2, 0)), ((1, 0), (3, 0)), False),   # collinear overlap
    (((0, 0), (1, 0)), ((0, 1), (1, 1)), True),
])
def test_segments_disjoint_examples(s1, s2, expected):
    assert segments_disjoint(s1, s2) is expected


@given(pt, pt, pt, pt)
def test_segments_disjoint_symmetric(a, b, c, d):
    assert segments_disjoint((a, b), (c, d)) == segments_disjoint((c, d), (a, b))
    assert segments_disjoint((a, b), (c, d)) == segments_disjoint((b, a), (d, c))


def test_segments_disjoint_matches_parametric_check():
    """Disagreements with a plain float parametric solve may only happen
    where a 1e-9 nudge of the coordinates could flip the answer."""
    rng = np.random.default_rng(7)
    n = 100_000
    a, b, c, d = (rng.random((n, 2)) for _ in range(4))
    r, s = b - a, d - c
    denom = r[:, 0] * s[:, 1] - r[:, 1] * s[:, 0]
    ac = c - a
    t = (ac[:, 0] * s[:, 1] - ac[:, 1] * s[:, 0]) / denom
    u = (ac[:, 0] * r[:, 1] - ac[:, 1] * r[:, 0]) / denom
    naive = (t >= 0) & (t <= 1) & (u >= 0) & (u <= 1)
    margin = np.minimum.reduce([np.abs(t), np.abs(1 - t), np.abs(u), np.abs(1 - u)])
    A, B, C, D = a.tolist(), b.tolist(), c.tolist(), d.tolist()
    ours = np.array([not segments_disjoint((A[i], B[i]), (C[i], D[i])) for i in range(n)])
    disagree = np.flatnonzero(ours != naive)
    assert np.all(margin[disagree] < 1e-9)
    assert naive.sum() > 1000  # the sample contains plenty of crossings


@pytest.mark.parametrize("p,q,expected", [((0, 0), (3, 4), 25), ((1, 1), (1, 1), 0), ((0, 0), (1, 1), 2)])
def test_dist2(p, q, expected):
    assert dist2(p, q) == expected


def test_point_in_triangle_closed():
    tri = ((0, 0), (2, 0), (0, 2))
    assert point_in_triangle((0.5, 0.5), *tri)
    assert point_in_triangle((1, 1), *tri)        # on the hypotenuse
    assert not point_in_triangle((1.01, 1.0), *tri)


def test_convex_hull_drops_interior_and_collinear():
    pts = [(0, 0), (1, 0), (2, 0), (2, 2), (0, 2), (1, 1)]
    assert convex_hull(pts) == [0, 2, 3, 4]
