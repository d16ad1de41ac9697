"""Square grid of side 2*sqrt(2)*delta and edge classification on it.

Corner ``(cx, cy)`` sits at ``origin + (cx, cy) * cell_side``; cell
``(ix, iy)`` has corners ``(ix, iy)`` .. ``(ix + 1, iy + 1)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ..errors import DegenerateDelta, NonAdjacentCells
from ..geometry import Point

# points closer than this (in cell units) to a grid line force an origin shift
LINE_CLEARANCE = 1e-9


class CellIndex(NamedTuple):
    ix: int
    iy: int


class EdgeKind(enum.Enum):
    INTERNAL = "internal"
    S_EDGE = "s-edge"
    D_EDGE = "d-edge"


@dataclass(frozen=True)
class ClassifiedEdge:
    edge: tuple[int, int]
    kind: EdgeKind
    cells: tuple[CellIndex, CellIndex]
    corner: Point | None = None          # shared corner, d-edges only
    corner_index: tuple[int, int] | None = None


@dataclass
class GridContext:
    delta: float
    cell_side: float
    origin: Point
    ix: np.ndarray
    iy: np.ndarray

    @property
    def zone_radius(self) -> float:
        """l1 radius of a danger zone; half the cell side, i.e. sqrt(2)*delta."""
        return self.cell_side / 2.0

    def cell_of(self, i: int) -> CellIndex:
        return CellIndex(int(self.ix[i]), int(self.iy[i]))

    def corner_xy(self, cx: int, cy: int) -> Point:
        return Point(self.origin[0] + cx * self.cell_side, self.origin[1] + cy * self.cell_side)

    def cell_bounds(self, cell) -> tuple[float, float, float, float]:
        x0 = self.origin[0] + cell[0] * self.cell_side
        y0 = self.origin[1] + cell[1] * self.cell_side
        return x0, y0, x0 + self.cell_side, y0 + self.cell_side


def _assign(points: np.ndarray, origin, c: float):
    u = (points - np.asarray(origin)) / c
    fl = np.floor(u)
    frac = u - fl
    clear = bool(np.all(np.minimum(frac, 1.0 - frac) > LINE_CLEARANCE))
    return fl.astype(np.int64), clear


def build_grid(points, delta: float, origin=None) -> GridContext:
    """Lay the grid so that no point is within ``LINE_CLEARANCE`` cells of a
    grid line. The starting origin (given, or half a cell below-left of the
    bounding box) is shifted diagonally by c/3, c/5, ... until that holds."""
    if not delta > 0:
        raise DegenerateDelta(f"delta must be positive, got {delta}")
    pts = np.asarray(points, dtype=float)
    c = 2.0 * math.sqrt(2.0) * delta
    if origin is None:
        base = (float(pts[:, 0].min()) - c / 2, float(pts[:, 1].min()) - c / 2)
    else:
        base = (float(origin[0]), float(origin[1]))
    o = base
    for m in range(0, 10_000):
        if m:
            s = c / (2 * m + 1)
            o = (base[0] + s, base[1] + s)
        cells, clear = _assign(pts, o, c)
        if clear:
            return GridContext(delta, c, Point(*o), cells[:, 0], cells[:, 1])
    raise DegenerateDelta("could not place the grid clear of every point")


def classify(edge, grid: GridContext) -> ClassifiedEdge:
    u, v = edge
    a, b = grid.cell_of(u), grid.cell_of(v)
    dx, dy = b.ix - a.ix, b.iy - a.iy
    if abs(dx) > 1 or abs(dy) > 1:
        raise NonAdjacentCells(f"edge {edge} joins non-adjacent cells {a} and {b}")
    if dx == 0 and dy == 0:
        return ClassifiedEdge((u, v), EdgeKind.INTERNAL, (a, b))
    if dx == 0 or dy == 0:
        return ClassifiedEdge((u, v), EdgeKind.S_EDGE, (a, b))
    ci = (max(a.ix, b.ix), max(a.iy, b.iy))
    return ClassifiedEdge((u, v), EdgeKind.D_EDGE, (a, b), grid.corner_xy(*ci), ci)


def cells_around(corner: tuple[int, int]) -> list[tuple[int, int]]:
    cx, cy = corner
    return [(cx - 1, cy - 1), (cx, cy - 1), (cx - 1, cy), (cx, cy)]


def flanking_cells(a, b) -> list[tuple[int, int]]:
    """The two cells sharing the corner of diagonal neighbours ``a``, ``b``."""
    return [(a[0], b[1]), (b[0], a[1])]


def d_corner(a, b) -> tuple[int, int]:
    return (max(a[0], b[0]), max(a[1], b[1]))


def cell_corners(cell) -> list[tuple[int, int]]:
    ix, iy = cell
    return [(ix, iy), (ix + 1, iy), (ix, iy + 1), (ix + 1, iy + 1)]
