"""Search random small instances for a large exact ratio
bn(non-crossing optimum) / bn(unrestricted optimum) and keep the worst one
as a regression fixture.

    python scripts/ratio_search.py --trials 1000 --pairs 3 4 5
"""

import argparse
from pathlib import Path

from bncm.instances import write_points
from bncm.report import RATIO, ratio_search

FIXTURE = Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "ratio_witness.txt"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--pairs", type=int, nargs="+", default=[3, 4, 5])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--fixture", type=Path, default=FIXTURE)
    ap.add_argument("--write", action="store_true", help="overwrite the fixture with the new witness")
    args = ap.parse_args()

    s = ratio_search(args.pairs, args.trials, args.seed)
    hist = {}
    for r in s.ratios:
        b = round(r, 2)
        hist[b] = hist.get(b, 0) + 1
    print(f"trials {s.trials}  max ratio {s.max_ratio!r}  bound {RATIO:.6f}  above one {s.above_one}")
    for b in sorted(hist):
        print(f"  {b:5.2f}  {hist[b]}")
    if args.write and s.max_ratio > 1.0:
        write_points(args.fixture, s.witness,
                     f"ratio={s.max_ratio!r}\nfound by ratio_search trials={args.trials} "
                     f"pairs={' '.join(map(str, args.pairs))} seed={args.seed}")
        print(f"wrote {args.fixture}")


if __name__ == "__main__":
    main()
