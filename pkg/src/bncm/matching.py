"""Point sets and matchings over them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import DuplicatePoints, EmptyMatching, IndexOutOfRange, InputError, OddCardinality
from .geometry import segments_intersect


def as_pointset(points, *, even: bool = False) -> np.ndarray:
    """Validate and return an ``(N, 2)`` float array of distinct finite points."""
    arr = np.asarray(points, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2:
        if arr.size == 0:
            arr = arr.reshape(0, 2)
        else:
            raise InputError(f"expected an (N, 2) array of points, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise InputError("point coordinates must be finite")
    if len(arr) > 1 and len(np.unique(arr, axis=0)) != len(arr):
        raise DuplicatePoints("point set contains duplicate points")
    if even and (len(arr) < 2 or len(arr) % 2):
        raise OddCardinality(f"need an even number (>= 2) of points, got {len(arr)}")
    return arr


@dataclass(frozen=True)
class Matching:
    """A set of unordered index pairs; stored as sorted ``(i, j)`` with i < j."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for i, j in self.pairs:
            if i == j:
                raise InputError(f"self-loop ({i}, {j}) in matching")
            if i in seen or j in seen:
                raise InputError(f"index reused in matching at pair ({i}, {j})")
            seen.update((i, j))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> "Matching":
        norm = sorted((min(int(a), int(b)), max(int(a), int(b))) for a, b in pairs)
        return cls(tuple(norm))

    @classmethod
    def from_mate(cls, mate) -> "Matching":
        return cls(tuple((i, int(j)) for i, j in enumerate(mate) if j >= 0 and i < j))

    def mate(self, n_points: int) -> list[int]:
        mate = [-1] * n_points
        for i, j in self.pairs:
            mate[i] = j
            mate[j] = i
        return mate

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def as_array(self) -> np.ndarray:
        return np.array(self.pairs, dtype=np.int64).reshape(-1, 2)


def _check_indices(m: Matching, n_points: int) -> None:
    for i, j in m.pairs:
        if not (0 <= i < n_points and 0 <= j < n_points):
            raise IndexOutOfRange(f"pair ({i}, {j}) out of range for {n_points} points")


def edge_lengths2(m: Matching, points: np.ndarray) -> np.ndarray:
    e = m.as_array()
    d = points[e[:, 0]] - points[e[:, 1]]
    return d[:, 0] * d[:, 0] + d[:, 1] * d[:, 1]


def bottleneck2(m: Matching, points) -> float:
    """Squared length of the longest edge."""
    points = np.asarray(points, dtype=float)
    if not m.pairs:
        raise EmptyMatching("bottleneck of an empty matching")
    _check_indices(m, len(points))
    return float(edge_lengths2(m, points).max())


def bottleneck(m: Matching, points) -> float:
    return math.sqrt(bottleneck2(m, points))


def is_perfect(m: Matching, points) -> bool:
    n = len(points)
    _check_indices(m, n)
    return 2 * len(m.pairs) == n


def crossing_pairs(m: Matching, points, *, first_only: bool = False) -> list[tuple[int, int]]:
    """Indices (into ``m.pairs``) of edge pairs whose closed segments meet.

    Bounding boxes prune candidates in bulk; survivors go through the exact
    predicate.
    """
    points = np.asarray(points, dtype=float)
    _check_indices(m, len(points))
    e = m.as_array()
    if len(e) < 2:
        return []
    a, b = points[e[:, 0]], points[e[:, 1]]
    lo = np.minimum(a, b)
    hi = np.maximum(a, b)
    pts = points.tolist()
    pairs = m.pairs
    out = []
    for i in range(len(e) - 1):
        rest = slice(i + 1, None)
        hit = ((lo[rest, 0] <= hi[i, 0]) & (hi[rest, 0] >= lo[i, 0])
               & (lo[rest, 1] <= hi[i, 1]) & (hi[rest, 1] >= lo[i, 1]))
        for off in np.flatnonzero(hit):
            j = i + 1 + int(off)
            (p, q), (r, s) = pairs[i], pairs[j]
            if segments_intersect(pts[p], pts[q], pts[r], pts[s]):
                out.append((i, j))
                if first_only:
                    return out
    return out


def is_noncrossing(m: Matching, points) -> bool:
    return not crossing_pairs(m, points, first_only=True)
