"""Exact bottleneck non-crossing matching for cocircular points.

An optimal matching only joins cyclically consecutive points, so only the two
"consecutive" pairings have to be compared.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotCocircular, OddCardinality
from .geometry import convex_hull, dist2
from .matching import Matching, as_pointset

COCIRCULAR_RTOL = 1e-6


@dataclass(frozen=True)
class CircularInstance:
    points: np.ndarray
    order: tuple[int, ...]
    center: tuple[float, float]
    radius: float


def circumcenter(a, b, c) -> tuple[float, float]:
    ax, ay = a
    bx, by = b[0] - ax, b[1] - ay
    cx, cy = c[0] - ax, c[1] - ay
    d = 2.0 * (bx * cy - by * cx)
    if d == 0.0:
        raise NotCocircular("three hull points are collinear")
    b2 = bx * bx + by * by
    c2 = cx * cx + cy * cy
    ux = (cy * b2 - by * c2) / d
    uy = (bx * c2 - cx * b2) / d
    return ax + ux, ay + uy


def angular_order(points, rtol: float = COCIRCULAR_RTOL) -> CircularInstance:
    pts = as_pointset(points)
    n = len(pts)
    if n < 2:
        raise OddCardinality("need at least two points")
    if n == 2:
        center = tuple(pts.mean(axis=0))
    else:
        hull = convex_hull(pts.tolist())
        if len(hull) < 3:
            raise NotCocircular("points are collinear")
        h = len(hull)
        # spread-out hull vertices keep the circumcenter well conditioned
        a, b, c = (pts[hull[0]], pts[hull[h // 3]], pts[hull[(2 * h) // 3]])
        center = circumcenter(a, b, c)
    r = np.hypot(pts[:, 0] - center[0], pts[:, 1] - center[1])
    radius = float(r.mean())
    if np.abs(r - radius).max() > rtol * radius:
        raise NotCocircular(f"radial residual {np.abs(r - radius).max():.3g} exceeds {rtol} x radius")
    ang = np.arctan2(pts[:, 1] - center[1], pts[:, 0] - center[0])
    cw = sorted(range(n), key=lambda i: -ang[i])
    start = min(range(n), key=lambda i: (pts[i, 0], pts[i, 1]))
    s = cw.index(start)
    order = tuple(cw[s:] + cw[:s])
    return CircularInstance(pts, order, (float(center[0]), float(center[1])), radius)


def solve_circle(inst: CircularInstance) -> tuple[Matching, float]:
    q = inst.order
    n = len(q)
    if n < 2 or n % 2:
        raise OddCardinality(f"need an even number (>= 2) of points, got {n}")
    p = inst.points.tolist()
    first = Matching.from_pairs((q[i], q[i + 1]) for i in range(0, n, 2))
    second = Matching.from_pairs((q[i], q[(i + 1) % n]) for i in range(1, n, 2))

    def bn2(m):
        return max(dist2(p[i], p[j]) for i, j in m.pairs)

    b1, b2 = bn2(first), bn2(second)
    if b1 < b2 or (b1 == b2 and first.pairs[0] <= second.pairs[0]):
        return first, math.sqrt(b1)
    return second, math.sqrt(b2)
