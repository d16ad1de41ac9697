"""Push many arbitrary (not bottleneck-optimal) matchings through the
conversion and count rule firings. Any exception or invalid output is
printed with its seed so it can be replayed.

    python scripts/stress_convert.py --instances 20000
"""

import argparse
import math
from collections import Counter

import numpy as np

from bncm.approx import RATIO, convert_detailed
from bncm.matching import Matching, bottleneck, is_noncrossing, is_perfect


def instance(seed):
    rng = np.random.default_rng(seed)
    k = int(rng.integers(1, 150))
    scale = float(rng.choice([2.0, 5.0, 10.0, 30.0]))
    c = rng.random((k, 2)) * scale
    ang = rng.random(k) * 2 * math.pi
    length = rng.random(k) ** 0.3
    length[0] = 1.0
    q = c + np.c_[np.cos(ang), np.sin(ang)] * length[:, None]
    return np.vstack([c, q]), Matching.from_pairs((i, i + k) for i in range(k))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--instances", type=int, default=5000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    fired, bad = Counter(), 0
    for s in range(args.seed, args.seed + args.instances):
        pts, m = instance(s)
        try:
            cv = convert_detailed(pts, m)
        except Exception as exc:  # report and keep going
            bad += 1
            print(f"seed {s}: {exc!r}")
            continue
        fired.update(f.rule for f in cv.reduced.trace)
        out = cv.matching
        if not (is_perfect(out, pts) and is_noncrossing(out, pts)
                and bottleneck(out, pts) <= RATIO * cv.delta * (1 + 1e-9)):
            bad += 1
            print(f"seed {s}: invalid output")
    print(f"{args.instances} instances, {bad} failures")
    print("firings", dict(sorted(fired.items())))


if __name__ == "__main__":
    main()
