"""Planar predicates on closed segments.

All length comparisons elsewhere in the package go through ``dist2`` so that
square roots only show up in reports.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import NamedTuple, Sequence


class Point(NamedTuple):
    x: float
    y: float


class Segment(NamedTuple):
    a: Point
    b: Point


class Orientation(enum.IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


# Shewchuk's ccwerrboundA: (3 + 16 eps) eps with eps = 2**-53.
_CCW_ERRBOUND = (3.0 + 16.0 * 2.0**-53) * 2.0**-53


def orient_det(p: Sequence[float], q: Sequence[float], r: Sequence[float]) -> int:
    """Sign (-1, 0, 1) of the doubled signed area of triangle pqr.

    A float evaluation is trusted when its magnitude clears the forward error
    bound; otherwise the determinant is recomputed exactly with rationals.
    """
    detleft = (q[0] - p[0]) * (r[1] - p[1])
    detright = (q[1] - p[1]) * (r[0] - p[0])
    det = detleft - detright
    bound = _CCW_ERRBOUND * (abs(detleft) + abs(detright))
    if det > bound:
        return 1
    if -det > bound:
        return -1
    px, py = Fraction(p[0]), Fraction(p[1])
    exact = (Fraction(q[0]) - px) * (Fraction(r[1]) - py) - (Fraction(q[1]) - py) * (Fraction(r[0]) - px)
    return (exact > 0) - (exact < 0)


def orientation(p: Sequence[float], q: Sequence[float], r: Sequence[float]) -> Orientation:
    return Orientation(orient_det(p, q, r))


def _on_segment(p, q, r) -> bool:
    # r is known to be collinear with pq
    return (min(p[0], q[0]) <= r[0] <= max(p[0], q[0])
            and min(p[1], q[1]) <= r[1] <= max(p[1], q[1]))


def segments_intersect(a, b, c, d) -> bool:
    """True iff closed segments ab and cd share at least one point."""
    if (max(a[0], b[0]) < min(c[0], d[0]) or max(c[0], d[0]) < min(a[0], b[0])
            or max(a[1], b[1]) < min(c[1], d[1]) or max(c[1], d[1]) < min(a[1], b[1])):
        return False
    o1 = orient_det(a, b, c)
    o2 = orient_det(a, b, d)
    o3 = orient_det(c, d, a)
    o4 = orient_det(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    if o1 == 0 and _on_segment(a, b, c):
        return True
    if o2 == 0 and _on_segment(a, b, d):
        return True
    if o3 == 0 and _on_segment(c, d, a):
        return True
    if o4 == 0 and _on_segment(c, d, b):
        return True
    return False


def segments_disjoint(s1: Sequence[Sequence[float]], s2: Sequence[Sequence[float]]) -> bool:
    """Closed-set disjointness: shared endpoints, T-contacts and collinear
    overlaps all count as intersecting."""
    return not segments_intersect(s1[0], s1[1], s2[0], s2[1])


def dist2(p: Sequence[float], q: Sequence[float]) -> float:
    dx = p[0] - q[0]
    dy = p[1] - q[1]
    return dx * dx + dy * dy


def dist(p: Sequence[float], q: Sequence[float]) -> float:
    return math.sqrt(dist2(p, q))


def point_in_triangle(p, a, b, c) -> bool:
    """Closed triangle membership (degenerate triangles allowed)."""
    d1 = orient_det(a, b, p)
    d2 = orient_det(b, c, p)
    d3 = orient_det(c, a, p)
    has_neg = d1 < 0 or d2 < 0 or d3 < 0
    has_pos = d1 > 0 or d2 > 0 or d3 > 0
    return not (has_neg and has_pos)


def convex_hull(points: Sequence[Sequence[float]]) -> list[int]:
    """Indices of the strict convex hull in counter-clockwise order, starting
    at the lexicographically least point. Collinear boundary points are
    dropped."""
    order = sorted(range(len(points)), key=lambda i: (points[i][0], points[i][1]))
    if len(order) <= 2:
        return order

    def half(seq):
        chain: list[int] = []
        for i in seq:
            while len(chain) >= 2 and orient_det(points[chain[-2]], points[chain[-1]], points[i]) <= 0:
                chain.pop()
            chain.append(i)
        return chain

    lower = half(order)
    upper = half(reversed(order))
    hull = lower[:-1] + upper[:-1]
    return hull
