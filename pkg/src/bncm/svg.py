"""SVG 1.1 rendering of a point set and a matching on it."""

from __future__ import annotations

from xml.sax.saxutils import quoteattr

import numpy as np

from .errors import EmptyMatching, IndexOutOfRange
from .matching import Matching

MARGIN = 0.05


def render_svg(points, matching: Matching, title: str | None = None, size: float = 800.0) -> str:
    pts = np.asarray(points, dtype=float)
    if not matching.pairs:
        raise EmptyMatching("nothing to render")
    if any(not (0 <= i < len(pts) and 0 <= j < len(pts)) for i, j in matching.pairs):
        raise IndexOutOfRange("matching refers to points that are not in the file")
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    span = float(max(hi[0] - lo[0], hi[1] - lo[1], 1e-12))
    pad = MARGIN * span
    x0, y0 = lo[0] - pad, lo[1] - pad
    w = (hi[0] - lo[0]) + 2 * pad
    h = (hi[1] - lo[1]) + 2 * pad
    scale = size / max(w, h)

    def xy(p):
        # flip y so the picture reads like the usual math axes
        return (p[0] - x0) * scale, (y0 + h - p[1]) * scale

    e = matching.as_array()
    d = pts[e[:, 0]] - pts[e[:, 1]]
    longest = int(np.argmax((d * d).sum(axis=1)))
    W, H = w * scale, h * scale
    r = max(1.5, 0.006 * size)
    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{W:.2f}" height="{H:.2f}" '
           f'viewBox="0 0 {W:.2f} {H:.2f}">']
    if title:
        out.append(f"<title>{title}</title>")
    out.append(f'<rect x="0" y="0" width="{W:.2f}" height="{H:.2f}" fill="white"/>')
    for k, (i, j) in enumerate(matching.pairs):
        (ax, ay), (bx, by) = xy(pts[i]), xy(pts[j])
        cls = "longest" if k == longest else "edge"
        style = 'stroke="#d62728" stroke-width="3"' if k == longest else 'stroke="#1f77b4" stroke-width="1.5"'
        out.append(f'<line class={quoteattr(cls)} x1="{ax:.3f}" y1="{ay:.3f}" x2="{bx:.3f}" y2="{by:.3f}" {style}/>')
    for p in pts:
        cx, cy = xy(p)
        out.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="{r:.2f}" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
