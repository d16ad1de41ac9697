"""Exact bottleneck perfect matching (crossings allowed).

Binary search over the sorted pairwise squared distances; a threshold is
feasible when the graph of all pairs at most that far apart has a perfect
matching.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .blossom import matching_size, max_matching
from .matching import Matching, as_pointset


@dataclass
class ThresholdGraph:
    n: int
    adj: list[list[int]]
    threshold2: float


def pairwise_dist2(points: np.ndarray) -> np.ndarray:
    diff = points[:, None, :] - points[None, :, :]
    return diff[..., 0] * diff[..., 0] + diff[..., 1] * diff[..., 1]


def candidate_thresholds(points) -> np.ndarray:
    """Ascending distinct squared distances over all pairs."""
    pts = np.asarray(points, dtype=float)
    d2 = pairwise_dist2(pts)
    iu = np.triu_indices(len(pts), k=1)
    return np.unique(d2[iu])


def threshold_graph(d2: np.ndarray, t2: float) -> ThresholdGraph:
    close = d2 <= t2
    np.fill_diagonal(close, False)
    adj = [np.flatnonzero(row).tolist() for row in close]
    return ThresholdGraph(len(d2), adj, t2)


def max_matching_size(g: ThresholdGraph, mate: list[int] | None = None) -> tuple[int, list[int]]:
    """Size of a maximum matching of ``g`` together with a witness mate array."""
    mate = max_matching(g.adj, mate)
    return matching_size(mate), mate


def solve_bottleneck(points) -> tuple[Matching, float]:
    """Perfect matching minimising the longest edge; returns (matching, bn)."""
    pts = as_pointset(points, even=True)
    n = len(pts)
    d2 = pairwise_dist2(pts)
    cands = np.unique(d2[np.triu_indices(n, k=1)])

    # every point needs some partner, so bn >= max nearest-neighbour distance
    off = d2 + np.diag(np.full(n, np.inf))
    lo = int(np.searchsorted(cands, off.min(axis=1).max()))
    hi = len(cands) - 1
    need = n // 2

    # a matching found at an infeasible threshold stays valid for every
    # larger one, so it seeds later probes
    seed: list[int] | None = None
    witness: list[int] | None = None
    while lo < hi:
        mid = (lo + hi) // 2
        size, mate = max_matching_size(threshold_graph(d2, cands[mid]), seed)
        if size == need:
            hi = mid
            witness = mate
        else:
            lo = mid + 1
            seed = mate
    if witness is None or not _within(witness, d2, cands[lo]):
        size, witness = max_matching_size(threshold_graph(d2, cands[lo]), seed)
        assert size == need
    m = Matching.from_mate(witness)
    return m, math.sqrt(float(cands[lo]))


def _within(mate: list[int], d2: np.ndarray, t2: float) -> bool:
    return all(d2[i, j] <= t2 for i, j in enumerate(mate))
