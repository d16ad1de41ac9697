"""Stage 2: rebuild a non-crossing matching cell by cell, using the reduced
matching only as a template for which cell pairs get an external edge."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..errors import EmptyCell, InvariantViolation, NotEnoughPoints, OddCount
from ..geometry import point_in_triangle
from .grid import d_corner
from .rules import Reducer

DIRECTIONS = ("up", "down", "left", "right")
STEP = {(0, 1): "up", (0, -1): "down", (-1, 0): "left", (1, 0): "right"}


def _extreme(cands: Sequence, direction: str):
    if direction == "up":
        return max(cands, key=lambda p: (p[1], p[0]))
    if direction == "down":
        return min(cands, key=lambda p: (p[1], p[0]))
    if direction == "right":
        return max(cands, key=lambda p: (p[0], p[1]))
    return min(cands, key=lambda p: (p[0], p[1]))


def side_corners(bounds, direction: str):
    """The two cell corners on the side facing ``direction``."""
    x0, y0, x1, y1 = bounds
    return {
        "up": ((x0, y1), (x1, y1)),
        "down": ((x0, y0), (x1, y0)),
        "left": ((x0, y0), (x0, y1)),
        "right": ((x1, y0), (x1, y1)),
    }[direction]


def in_side_triangle(q, p, direction: str, bounds) -> bool:
    """Whether ``q`` lies in the triangle spanned by ``p`` and the cell side
    facing ``direction``."""
    a, b = side_corners(bounds, direction)
    return point_in_triangle(q, p, a, b)


def pick_d_endpoint(corner, candidates: Sequence) -> tuple[float, float]:
    """Point closest (in l1) to the grid corner; ties go to the smaller
    (x, y). Within one quadrant of the corner this is the point closest to
    the supporting line of slope -/+1 through it."""
    if not candidates:
        raise EmptyCell("no point available for a d-edge endpoint")
    ax, ay = corner
    return min(candidates, key=lambda p: (abs(p[0] - ax) + abs(p[1] - ay), p[0], p[1]))


def pick_s_endpoints(bounds, directions: Sequence[str], candidates: Sequence) -> dict[str, tuple]:
    """Assign a distinct candidate to every s-edge direction so the chosen
    s-edges cannot cross: extreme points where they are distinct, otherwise
    the recursive split on a point that is extreme in two directions."""
    dirs = [d for d in DIRECTIONS if d in set(directions)]
    cands = [tuple(p) for p in candidates]
    if len(cands) < len(dirs):
        raise NotEnoughPoints(f"{len(cands)} candidates for {len(dirs)} directions")
    if not dirs:
        return {}
    ext = {d: _extreme(cands, d) for d in dirs}
    if len(set(ext.values())) == len(dirs):
        return ext
    for d in dirs:
        shared = [e for e in dirs if ext[e] == ext[d]]
        if len(shared) >= 2:
            break
    p = ext[d]
    di, dj = shared[0], shared[1]
    rest = [q for q in cands if q != p]
    sub = pick_s_endpoints(bounds, [d for d in dirs if d != di], rest)
    if not in_side_triangle(p, sub[dj], dj, bounds):
        sub[di] = p
        return sub
    sub = pick_s_endpoints(bounds, [d for d in dirs if d != dj], rest)
    sub[dj] = p
    return sub


def internal_match(points: Sequence) -> list[tuple[tuple, tuple]]:
    """Pair points in (x, y) order: first with second, third with fourth..."""
    if len(points) % 2:
        raise OddCount(f"cannot pair {len(points)} points")
    s = sorted(tuple(p) for p in points)
    return [(s[i], s[i + 1]) for i in range(0, len(s), 2)]


@dataclass(frozen=True)
class FreeRegion:
    """Convex region ``{x : n . x < b for all half-planes}`` inside a cell."""

    bounds: tuple[float, float, float, float]
    halfplanes: tuple[tuple[float, float, float], ...]

    def contains(self, p, strict: bool = True) -> bool:
        x0, y0, x1, y1 = self.bounds
        if strict:
            if not (x0 < p[0] < x1 and y0 < p[1] < y1):
                return False
            return all(nx * p[0] + ny * p[1] < b for nx, ny, b in self.halfplanes)
        if not (x0 <= p[0] <= x1 and y0 <= p[1] <= y1):
            return False
        return all(nx * p[0] + ny * p[1] <= b for nx, ny, b in self.halfplanes)


def free_region(bounds, chosen: Sequence[tuple]) -> FreeRegion:
    """Region left to internal edges once external endpoints are fixed.

    ``chosen`` holds ``(point, "s", direction)`` or ``(point, "d", corner)``.
    An s-endpoint cuts the cell with the line through it parallel to the
    crossed side; a d-endpoint with the line through it parallel to the
    diagonal the corner closes off.
    """
    x0, y0, x1, y1 = bounds
    cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
    hps = []
    for p, kind, where in chosen:
        if kind == "s":
            nx, ny = {"up": (0.0, 1.0), "down": (0.0, -1.0), "left": (-1.0, 0.0), "right": (1.0, 0.0)}[where]
        else:
            nx = 1.0 if where[0] > cx else -1.0
            ny = 1.0 if where[1] > cy else -1.0
        hps.append((nx, ny, nx * p[0] + ny * p[1]))
    return FreeRegion(tuple(bounds), tuple(hps))


@dataclass
class CellPlan:
    """External endpoint choices for one cell."""

    cell: tuple[int, int]
    endpoint: dict  # neighbour cell -> point index
    chosen: list    # (point, kind, direction-or-corner) for free_region


def plan_cells(red: Reducer) -> dict[tuple[int, int], CellPlan]:
    grid = red.grid
    links: dict = {}
    for keys in list(red.dedges.values()) + list(red.sedges.values()):
        for u, v in keys:
            a, b = red.cell(u), red.cell(v)
            links.setdefault(a, []).append(b)
            links.setdefault(b, []).append(a)
    plans = {}
    for cell, nbrs in links.items():
        ids = red.cell_points[cell]
        coords = [tuple(red.p[i]) for i in ids]
        index_of = dict(zip(coords, ids))
        plan = CellPlan(cell, {}, [])
        taken = set()
        for nb in sorted(n for n in nbrs if n[0] != cell[0] and n[1] != cell[1]):
            corner = grid.corner_xy(*d_corner(cell, nb))
            pt = pick_d_endpoint(corner, coords)
            if pt in taken:
                raise InvariantViolation(f"cell {cell}: two corners picked the same point")
            taken.add(pt)
            plan.endpoint[nb] = index_of[pt]
            plan.chosen.append((pt, "d", tuple(corner)))
        s_dirs = {STEP[(nb[0] - cell[0], nb[1] - cell[1])]: nb
                  for nb in nbrs if nb[0] == cell[0] or nb[1] == cell[1]}
        if s_dirs:
            bounds = grid.cell_bounds(cell)
            rest = [p for p in coords if p not in taken]
            for d, pt in pick_s_endpoints(bounds, list(s_dirs), rest).items():
                plan.endpoint[s_dirs[d]] = index_of[pt]
                plan.chosen.append((pt, "s", d))
        plans[cell] = plan
    return plans


def assemble(red: Reducer, plans: dict) -> list[tuple[int, int]]:
    """External edges from the plans plus left-to-right internal pairing of
    every remaining point, cell by cell."""
    pairs = []
    for keys in list(red.dedges.values()) + list(red.sedges.values()):
        for u, v in keys:
            a, b = red.cell(u), red.cell(v)
            pairs.append((plans[a].endpoint[b], plans[b].endpoint[a]))
    n = len(red.mate)
    external = np.zeros(n, dtype=bool)
    for plan in plans.values():
        external[list(plan.endpoint.values())] = True
    rest = np.flatnonzero(~external)
    g = red.grid
    pts = red.points
    order = rest[np.lexsort((pts[rest, 1], pts[rest, 0], g.iy[rest], g.ix[rest]))]
    if len(order) % 2:
        raise InvariantViolation("odd number of internal points")
    first, second = order[0::2], order[1::2]
    split = (g.ix[first] != g.ix[second]) | (g.iy[first] != g.iy[second])
    if split.any():
        raise InvariantViolation("a cell has an odd number of internal points")
    pairs.extend(zip(first.tolist(), second.tolist()))
    return pairs
