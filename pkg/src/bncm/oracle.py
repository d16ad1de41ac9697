"""Brute-force ground truth for small instances.

Enumeration order is lexicographic in the sorted edge list: the lowest
unmatched index is paired with every larger unmatched index in turn.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import BudgetExceeded
from .geometry import dist2, segments_intersect
from .matching import Matching, as_pointset

DEFAULT_CAP = 16


def default_cap() -> int:
    return int(os.environ.get("BNCM_ORACLE_CAP", DEFAULT_CAP))


@dataclass
class EnumerationBudget:
    max_points: int = DEFAULT_CAP
    visited: int = 0

    @classmethod
    def from_env(cls) -> "EnumerationBudget":
        return cls(max_points=default_cap())

    def admit(self, n_points: int) -> None:
        if n_points > self.max_points:
            raise BudgetExceeded(f"{n_points} points exceeds the oracle cap of {self.max_points}")


def _prepare(points, budget):
    pts = as_pointset(points, even=True)
    budget = budget if budget is not None else EnumerationBudget.from_env()
    budget.admit(len(pts))
    return pts, budget


def enumerate_perfect(points, budget: EnumerationBudget | None = None) -> Iterator[Matching]:
    """All (2n-1)!! perfect matchings, each exactly once."""
    pts, budget = _prepare(points, budget)
    return _perfect(pts, budget)


def _perfect(pts, budget):
    n = len(pts)
    free = [True] * n
    edges: list[tuple[int, int]] = []

    def rec():
        i = next((k for k in range(n) if free[k]), -1)
        if i < 0:
            budget.visited += 1
            yield Matching(tuple(edges))
            return
        free[i] = False
        for j in range(i + 1, n):
            if free[j]:
                free[j] = False
                edges.append((i, j))
                yield from rec()
                edges.pop()
                free[j] = True
        free[i] = True

    yield from rec()


def enumerate_noncrossing(points, budget: EnumerationBudget | None = None) -> Iterator[Matching]:
    """Non-crossing perfect matchings; a branch dies as soon as its newest
    edge meets an earlier one."""
    pts, budget = _prepare(points, budget)
    return _noncrossing(pts, budget)


def _noncrossing(pts, budget):
    n = len(pts)
    p = pts.tolist()
    idx = {}
    for i in range(n):
        for j in range(i + 1, n):
            idx[i, j] = len(idx)
    keys = list(idx)
    crosses = [[False] * len(keys) for _ in keys]
    for a, (i, j) in enumerate(keys):
        for b in range(a + 1, len(keys)):
            k, l = keys[b]
            if {i, j} & {k, l}:
                continue
            crosses[a][b] = crosses[b][a] = segments_intersect(p[i], p[j], p[k], p[l])
    free = [True] * n
    edges: list[tuple[int, int]] = []
    eids: list[int] = []

    def rec():
        i = next((k for k in range(n) if free[k]), -1)
        if i < 0:
            budget.visited += 1
            yield Matching(tuple(edges))
            return
        free[i] = False
        for j in range(i + 1, n):
            if not free[j]:
                continue
            e = idx[i, j]
            row = crosses[e]
            if any(row[f] for f in eids):
                continue
            free[j] = False
            edges.append((i, j))
            eids.append(e)
            yield from rec()
            eids.pop()
            edges.pop()
            free[j] = True
        free[i] = True

    yield from rec()


def _min_bottleneck(points: np.ndarray, matchings) -> tuple[Matching, float]:
    p = points.tolist()
    best, best2 = None, math.inf
    for m in matchings:
        b2 = max(dist2(p[i], p[j]) for i, j in m.pairs)
        if b2 < best2:
            best, best2 = m, b2
    return best, math.sqrt(best2)


def exact_bncm(points, budget: EnumerationBudget | None = None) -> tuple[Matching, float]:
    """Minimum-bottleneck non-crossing perfect matching; ties go to the
    lexicographically least edge list (the first one enumerated)."""
    pts = np.asarray(points, dtype=float)
    return _min_bottleneck(pts, enumerate_noncrossing(pts, budget))


def exact_bottleneck_bruteforce(points, budget: EnumerationBudget | None = None) -> tuple[Matching, float]:
    pts = np.asarray(points, dtype=float)
    return _min_bottleneck(pts, enumerate_perfect(pts, budget))
