"""Solve dispatch and the report record exchanged by the CLI."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

import numpy as np

from .approx import RATIO, convert
from .bottleneck import solve_bottleneck
from .circle import angular_order, solve_circle
from .convex import check_convex_order, solve_convex
from .errors import InputError, InvariantViolation
from .instances import InstanceSpec, generate
from .matching import Matching, as_pointset, bottleneck, is_noncrossing, is_perfect
from .oracle import exact_bncm

MODES = ("approx", "exact-small", "convex", "circle", "bottleneck")
NONCROSSING_MODES = frozenset(("approx", "exact-small", "convex", "circle"))
REL_SLACK = 1e-9


@dataclass
class SolveReport:
    mode: str
    bottleneck: float
    edges: list[tuple[int, int]]
    n_points: int
    elapsed_ms: float
    checks: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "bottleneck": self.bottleneck,
            "edges": [list(e) for e in self.edges],
            "n_points": self.n_points,
            "elapsed_ms": self.elapsed_ms,
            "checks": {k: v for k, v in self.checks.items() if v is not None},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_text(self) -> str:
        checks = " ".join(f"{k}={v}" for k, v in self.to_dict()["checks"].items())
        lines = [f"mode        {self.mode}",
                 f"points      {self.n_points}",
                 f"bottleneck  {self.bottleneck!r}",
                 f"elapsed_ms  {self.elapsed_ms:.3f}",
                 f"checks      {checks}",
                 "edges"]
        lines += [f"  {i} {j}" for i, j in self.edges]
        return "\n".join(lines) + "\n"

    @property
    def matching(self) -> Matching:
        return Matching.from_pairs(self.edges)

    @classmethod
    def from_dict(cls, d: dict) -> "SolveReport":
        try:
            return cls(d["mode"], float(d["bottleneck"]), [tuple(e) for e in d["edges"]],
                       int(d["n_points"]), float(d["elapsed_ms"]), dict(d.get("checks", {})))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed report: {exc}") from None


def solve(points, mode: str = "approx") -> SolveReport:
    """Run one solver and validate its output.

    A matching that fails its own mode's checks raises InvariantViolation
    instead of being reported.
    """
    if mode not in MODES:
        raise InputError(f"unknown mode {mode!r}; expected one of {MODES}")
    pts = as_pointset(points, even=True)
    t0 = time.perf_counter()
    ratio_ok = None
    if mode == "approx":
        m_c, bn_c = solve_bottleneck(pts)
        m = convert(pts, m_c)
        bn = bottleneck(m, pts)
        ratio_ok = bn <= RATIO * bn_c * (1 + REL_SLACK)
    elif mode == "bottleneck":
        m, bn = solve_bottleneck(pts)
    elif mode == "convex":
        m, bn = solve_convex(check_convex_order(pts))
    elif mode == "circle":
        m, bn = solve_circle(angular_order(pts))
    else:
        m, bn = exact_bncm(pts)
    elapsed = (time.perf_counter() - t0) * 1e3
    checks = {"perfect": is_perfect(m, pts), "noncrossing": is_noncrossing(m, pts),
              "ratio_bound_ok": ratio_ok}
    if not checks["perfect"]:
        raise InvariantViolation(f"{mode}: matching is not perfect")
    if mode in NONCROSSING_MODES and not checks["noncrossing"]:
        raise InvariantViolation(f"{mode}: matching has crossing edges")
    if ratio_ok is False:
        raise InvariantViolation(f"{mode}: bottleneck exceeds 2*sqrt(10) times the optimum")
    return SolveReport(mode, float(bn), list(m.pairs), len(pts), elapsed, checks)


@dataclass
class RatioSummary:
    trials: int
    max_ratio: float
    witness: np.ndarray | None
    ratios: list[float]

    @property
    def above_one(self) -> int:
        return sum(r > 1.0 for r in self.ratios)


def ratio_search(pairs, trials: int, seed: int = 0, kinds=("uniform", "clustered")) -> RatioSummary:
    """Exact bn(non-crossing optimum) / bn(unrestricted optimum) on random
    small instances; every ratio must stay within 2*sqrt(10)."""
    pairs = [pairs] if isinstance(pairs, int) else list(pairs)
    ss = np.random.SeedSequence(seed)
    best, witness, ratios = 0.0, None, []
    for t, child in enumerate(ss.spawn(trials)):
        spec = InstanceSpec(kinds[t % len(kinds)], pairs[t % len(pairs)],
                            int(child.generate_state(1)[0]), 1.0)
        pts = generate(spec)
        _, bn_nc = exact_bncm(pts)
        _, bn_c = solve_bottleneck(pts)
        r = bn_nc / bn_c
        if not (1.0 - REL_SLACK <= r <= RATIO * (1 + REL_SLACK)):
            raise InvariantViolation(f"ratio {r} outside [1, 2*sqrt(10)] for {spec}")
        ratios.append(r)
        if r > best:
            best, witness = r, pts
    return RatioSummary(trials, best, witness, ratios)


def ratio_of(points) -> float:
    pts = as_pointset(points, even=True)
    return exact_bncm(pts)[1] / solve_bottleneck(pts)[1]

