"""Seeded instance generators and the plain-text point file format.

A point file has one ``x y`` pair per line; ``#`` starts a comment line and
blank lines are skipped. Coordinates are written with 17 significant digits,
which round-trips IEEE doubles exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import InputError, IOFailure, ParseError
from .matching import as_pointset

KINDS = ("uniform", "convex", "circle", "clustered")


@dataclass(frozen=True)
class InstanceSpec:
    kind: str = "uniform"
    pairs: int = 4
    seed: int = 0
    scale: float = 1.0


def _stratified_angles(rng, n: int) -> np.ndarray:
    # one angle per sector, kept away from sector borders so neighbours never
    # get close enough for rounding to break strict convexity
    return 2 * math.pi * (np.arange(n) + rng.uniform(0.15, 0.85, n)) / n


def generate(spec: InstanceSpec) -> np.ndarray:
    if spec.pairs < 1:
        raise InputError(f"pairs must be >= 1, got {spec.pairs}")
    if spec.kind not in KINDS:
        raise InputError(f"unknown kind {spec.kind!r}; expected one of {KINDS}")
    rng = np.random.default_rng(spec.seed)
    n = 2 * spec.pairs
    s = float(spec.scale)
    if spec.kind == "uniform":
        pts = rng.random((n, 2)) * s
    elif spec.kind == "clustered":
        k = int(rng.integers(2, 6))
        centers = rng.random((k, 2)) * s
        pts = centers[rng.integers(0, k, n)] + rng.normal(scale=0.05 * s, size=(n, 2))
    elif spec.kind == "circle":
        th = rng.permutation(_stratified_angles(rng, n))
        r = s / 2
        pts = np.c_[s / 2 + r * np.cos(th), s / 2 + r * np.sin(th)]
    else:
        th = rng.permutation(_stratified_angles(rng, n))
        a, b = s / 2, s / 2 * rng.uniform(0.4, 1.0)
        phi = rng.uniform(0, math.pi)
        ex, ey = a * np.cos(th), b * np.sin(th)
        pts = np.c_[s / 2 + ex * math.cos(phi) - ey * math.sin(phi),
                    s / 2 + ex * math.sin(phi) + ey * math.cos(phi)]
    return as_pointset(pts)


def format_points(points, comment: str | None = None) -> str:
    lines = [f"# {c}" for c in comment.splitlines()] if comment else []
    lines += [f"{x:.17g} {y:.17g}" for x, y in np.asarray(points, dtype=float).tolist()]
    return "\n".join(lines) + "\n"


def write_points(path, points, comment: str | None = None) -> None:
    try:
        Path(path).write_text(format_points(points, comment))
    except OSError as exc:
        raise IOFailure(f"cannot write {path}: {exc}") from None


def parse_points(text: str) -> np.ndarray:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'x y', got {line!r}")
        try:
            x, y = float(parts[0]), float(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: bad number in {line!r}") from None
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ParseError(f"line {lineno}: non-finite coordinate")
        rows.append((x, y))
    return as_pointset(np.array(rows, dtype=float).reshape(-1, 2))


def read_points(path) -> np.ndarray:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise IOFailure(f"cannot read {path}: {exc}") from None
    return parse_points(text)
