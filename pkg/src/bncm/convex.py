"""Exact bottleneck non-crossing matching for points in convex position.

Interval dynamic program over the clockwise vertex order. ``B[i, j]`` holds
the optimal squared bottleneck of the half-open run ``i .. j-1``; the first
point of the run is matched to some ``k`` at odd offset, which splits the
rest into two independent runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bottleneck import pairwise_dist2
from .errors import NotConvexPosition, OddCardinality
from .geometry import convex_hull
from .matching import Matching, as_pointset

INF = math.inf


@dataclass(frozen=True)
class ConvexInstance:
    points: np.ndarray
    order: tuple[int, ...]  # order[r] = index of the r-th vertex clockwise


def check_convex_order(points) -> ConvexInstance:
    """Clockwise hull order starting at the lexicographically least point.

    Raises NotConvexPosition unless every point is a strict hull vertex.
    """
    pts = as_pointset(points)
    n = len(pts)
    if n <= 2:
        order = sorted(range(n), key=lambda i: (pts[i, 0], pts[i, 1]))
        return ConvexInstance(pts, tuple(order))
    hull = convex_hull(pts.tolist())
    if len(hull) != n:
        raise NotConvexPosition(f"only {len(hull)} of {n} points are strict hull vertices")
    order = [hull[0]] + hull[:0:-1]
    return ConvexInstance(pts, tuple(order))


def weight(i: int, j: int, inst: ConvexInstance) -> float:
    """Squared edge weight between the i-th and j-th vertices (1-based);
    infinite when i + j is even, since such a chord leaves an odd side."""
    if (i + j) % 2 == 0:
        return INF
    p = inst.points[inst.order[i - 1]]
    q = inst.points[inst.order[j - 1]]
    d = p - q
    return float(d[0] * d[0] + d[1] * d[1])


@dataclass
class DPTable:
    best2: np.ndarray   # (N+1, N+1); NaN where not yet filled
    choice: np.ndarray  # partner chosen for the first point of each run


def fill_table(inst: ConvexInstance) -> DPTable:
    n = len(inst.order)
    pts = inst.points[list(inst.order)]
    d2 = pairwise_dist2(pts)
    B = np.full((n + 1, n + 1), np.nan)
    B[np.arange(n + 1), np.arange(n + 1)] = 0.0
    choice = np.full((n + 1, n + 1), -1, dtype=np.int64)
    for length in range(2, n + 1, 2):
        I = np.arange(0, n - length + 1)
        J = I + length
        best = np.full(len(I), INF)
        arg = np.full(len(I), -1, dtype=np.int64)
        for t in range(1, length, 2):
            K = I + t
            inner = B[I + 1, K]
            outer = B[K + 1, J]
            # diagonal order guarantees both sub-runs are already solved
            assert not (np.isnan(inner).any() or np.isnan(outer).any())
            v = np.maximum(d2[I, K], np.maximum(inner, outer))
            upd = v < best  # strict: smallest k wins ties
            best[upd] = v[upd]
            arg[upd] = K[upd]
        B[I, J] = best
        choice[I, J] = arg
    return DPTable(B, choice)


def solve_convex(inst: ConvexInstance) -> tuple[Matching, float]:
    n = len(inst.order)
    if n < 2 or n % 2:
        raise OddCardinality(f"need an even number (>= 2) of points, got {n}")
    table = fill_table(inst)
    pairs = []
    stack = [(0, n)]
    while stack:
        i, j = stack.pop()
        if i >= j:
            continue
        k = int(table.choice[i, j])
        pairs.append((inst.order[i], inst.order[k]))
        stack.append((i + 1, k))
        stack.append((k + 1, j))
    return Matching.from_pairs(pairs), math.sqrt(table.best2[0, n])
