"""Conversion of any perfect matching into a non-crossing one whose longest
edge is at most 2*sqrt(10) times longer."""

from __future__ import annotations

import math
from dataclasses import dataclass


from ..errors import InputError
from ..matching import Matching, as_pointset, bottleneck2
from .grid import (CellIndex, ClassifiedEdge, EdgeKind, GridContext, build_grid, classify)
from .rules import Firing, Reducer, reduce_rules
from .stage2 import (CellPlan, FreeRegion, assemble, free_region, internal_match, pick_d_endpoint,
                     pick_s_endpoints, plan_cells)

RATIO = 2.0 * math.sqrt(10.0)

__all__ = [
    "RATIO", "CellIndex", "ClassifiedEdge", "EdgeKind", "GridContext", "build_grid", "classify",
    "Firing", "Reducer", "reduce_rules", "CellPlan", "FreeRegion", "free_region", "internal_match",
    "pick_d_endpoint", "pick_s_endpoints", "plan_cells", "Conversion", "convert", "convert_detailed",
]


@dataclass
class Conversion:
    matching: Matching
    delta: float
    grid: GridContext
    reduced: Reducer
    plans: dict


def convert_detailed(points, m_cross: Matching) -> Conversion:
    pts = as_pointset(points, even=True)
    if 2 * len(m_cross) != len(pts):
        raise InputError("input matching is not perfect")
    delta = math.sqrt(bottleneck2(m_cross, pts))
    grid = build_grid(pts, delta)
    red = reduce_rules(pts, m_cross.mate(len(pts)), grid)
    plans = plan_cells(red)
    pairs = assemble(red, plans)
    return Conversion(Matching.from_pairs(pairs), delta, grid, red, plans)


def convert(points, m_cross: Matching) -> Matching:
    """Non-crossing perfect matching with bottleneck <= 2*sqrt(10) * bn(m_cross)."""
    return convert_detailed(points, m_cross).matching
