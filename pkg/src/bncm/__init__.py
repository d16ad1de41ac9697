"""Bottleneck (non-crossing) matchings of planar point sets."""

from .approx import RATIO, convert
from .bottleneck import candidate_thresholds, solve_bottleneck
from .circle import angular_order, solve_circle
from .convex import check_convex_order, solve_convex
from .matching import Matching, as_pointset, bottleneck, is_noncrossing, is_perfect
from .oracle import exact_bncm, exact_bottleneck_bruteforce

__all__ = [
    "RATIO", "Matching", "angular_order", "as_pointset", "bottleneck", "candidate_thresholds",
    "check_convex_order", "convert", "exact_bncm", "exact_bottleneck_bruteforce", "is_noncrossing",
    "is_perfect", "solve_bottleneck", "solve_circle", "solve_convex",
]
