"""Command line interface: ``bncm {gen,solve,render,ratio-search,bench}``.

Exit codes: 0 success, 2 input or usage error, 3 internal invariant
violation. Output files are written only after a command has succeeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import InputError, InvariantViolation, IOFailure
from .instances import KINDS, InstanceSpec, format_points, generate, read_points
from .report import MODES, SolveReport, ratio_search, solve
from .svg import render_svg

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 2, 3


def _emit(text: str, output: str | None) -> None:
    if output in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        Path(output).write_text(text)
    except OSError as exc:
        raise IOFailure(f"cannot write {output}: {exc}") from None


def cmd_gen(args) -> int:
    spec = InstanceSpec(args.kind, args.pairs, args.seed, args.scale)
    pts = generate(spec)
    comment = f"kind={spec.kind} pairs={spec.pairs} seed={spec.seed} scale={spec.scale!r}"
    _emit(format_points(pts, comment), args.output)
    return EXIT_OK


def cmd_solve(args) -> int:
    pts = read_points(args.input)
    rep = solve(pts, args.mode)
    text = rep.to_json() + "\n" if args.format == "json" else rep.to_text()
    svg = render_svg(pts, rep.matching, title=f"{rep.mode} bn={rep.bottleneck:.6g}") if args.svg else None
    _emit(text, args.output)
    if svg is not None:
        _emit(svg, args.svg)
    return EXIT_OK


def cmd_render(args) -> int:
    pts = read_points(args.input)
    try:
        rep = SolveReport.from_dict(json.loads(Path(args.report).read_text()))
    except OSError as exc:
        raise IOFailure(f"cannot read {args.report}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"report is not JSON: {exc}") from None
    if rep.n_points != len(pts):
        raise InputError(f"report is for {rep.n_points} points, file has {len(pts)}")
    _emit(render_svg(pts, rep.matching, title=f"{rep.mode} bn={rep.bottleneck:.6g}"), args.output or args.svg)
    return EXIT_OK


def cmd_ratio_search(args) -> int:
    summary = ratio_search(args.pairs, args.trials, args.seed)
    result = {"trials": summary.trials, "pairs": args.pairs, "seed": args.seed,
              "max_ratio": summary.max_ratio, "above_one": summary.above_one,
              "witness": summary.witness.tolist() if summary.witness is not None else None}
    if args.format == "json":
        text = json.dumps(result) + "\n"
    else:
        text = (f"trials     {summary.trials}\nmax_ratio  {summary.max_ratio!r}\n"
                f"above_one  {summary.above_one}\n")
    if args.witness and summary.max_ratio > 1.0:
        _emit(format_points(summary.witness, f"ratio={summary.max_ratio!r}"), args.witness)
    _emit(text, args.output)
    return EXIT_OK


def cmd_bench(args) -> int:
    modes = args.mode or ["bottleneck", "approx"]
    rows = []
    for pairs in args.pairs:
        pts = generate(InstanceSpec(args.kind, pairs, args.seed, args.scale))
        for mode in modes:
            rep = solve(pts, mode)
            rows.append({"kind": args.kind, "n_points": len(pts), "mode": mode,
                         "bottleneck": rep.bottleneck, "elapsed_ms": rep.elapsed_ms})
    if args.format == "json":
        text = "".join(json.dumps(r) + "\n" for r in rows)
    else:
        text = "".join(f"{r['kind']:>9} {r['n_points']:>6} {r['mode']:>11} "
                       f"{r['bottleneck']:>12.6g} {r['elapsed_ms']:>10.1f} ms\n" for r in rows)
    _emit(text, args.output)
    return EXIT_OK


def _positive(v: str) -> int:
    try:
        i = int(v)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {v!r}") from None
    if i < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {i}")
    return i


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bncm", description="Bottleneck non-crossing matchings of planar points.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a seeded random instance")
    g.add_argument("--kind", choices=KINDS, default="uniform")
    g.add_argument("--pairs", type=_positive, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--scale", type=float, default=1.0)
    g.add_argument("--output", "-o")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="solve a point file")
    s.add_argument("--input", "-i", required=True)
    s.add_argument("--mode", choices=MODES, default="approx")
    s.add_argument("--format", choices=("json", "text"), default="json")
    s.add_argument("--output", "-o")
    s.add_argument("--svg", help="also render the matching to this SVG file")
    s.set_defaults(func=cmd_solve)

    r = sub.add_parser("render", help="render a solve report as SVG")
    r.add_argument("--input", "-i", required=True)
    r.add_argument("--report", required=True, help="JSON report written by 'solve'")
    r.add_argument("--output", "-o")
    r.add_argument("--svg", help="alias for --output")
    r.set_defaults(func=cmd_render)

    q = sub.add_parser("ratio-search", help="exact non-crossing / crossing bottleneck ratios")
    q.add_argument("--pairs", type=_positive, nargs="+", default=[3, 4, 5])
    q.add_argument("--trials", type=_positive, default=100)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--format", choices=("json", "text"), default="text")
    q.add_argument("--output", "-o")
    q.add_argument("--witness", help="write the worst instance here when its ratio exceeds 1")
    q.set_defaults(func=cmd_ratio_search)

    b = sub.add_parser("bench", help="time solvers on generated instances")
    b.add_argument("--kind", choices=KINDS, default="uniform")
    b.add_argument("--pairs", type=_positive, nargs="+", default=[10, 50, 100, 200])
    b.add_argument("--mode", choices=MODES, action="append")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--scale", type=float, default=1.0)
    b.add_argument("--format", choices=("json", "text"), default="text")
    b.add_argument("--output", "-o")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantViolation as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
