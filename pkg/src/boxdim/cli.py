"""Command-line front end.

Subcommands: ``dim`` (solve for the dimension), ``pressure`` (single
value or a CSV curve), ``oracle`` (exhaustive-enumeration cross-check),
``render`` (chaos-game PPM image) and ``examples`` (list built-in
systems).  Exit codes: 0 success, 2 validation error, 3 numeric
failure, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .dimension import affinity_dimension, modified_affinity_dimension
from .errors import NumericError, ParseError, ValidationError
from .ifs_io import IFSSpec, builtin_examples, parse_ifs
from .oracle import pressure_estimate
from .pressure import pressure
from .render import RenderConfig, render_to_file

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_NUMERIC = 3
EXIT_IO = 4


def _load_spec(name_or_path: str) -> IFSSpec:
    builtins = builtin_examples()
    if name_or_path in builtins:
        return builtins[name_or_path]
    with open(name_or_path, "r", encoding="utf-8") as fh:
        return parse_ifs(fh.read())


def _cmd_dim(args) -> int:
    spec = _load_spec(args.spec)
    if args.t is not None:
        result = modified_affinity_dimension(spec.linear_parts, args.t)
    else:
        result = affinity_dimension(spec.linear_parts)
    if args.json:
        print(
            json.dumps(
                {
                    "value": result.value,
                    "branch": result.branch,
                    "residual": result.residual,
                    "iterations": result.iterations,
                    "bracket": list(result.bracket),
                }
            )
        )
    else:
        print(f"dimension:  {result.value:.16g}")
        print(f"branch:     {result.branch}")
        print(f"residual:   {result.residual:.3g}")
        print(f"iterations: {result.iterations}")
    return EXIT_OK


def _pressure_line(spec: IFSSpec, s: float) -> tuple[float, float, str]:
    p = pressure(spec.linear_parts, s)
    return s, p.value, p.branch


def _cmd_pressure(args) -> int:
    spec = _load_spec(args.spec)
    if args.s is not None:
        values = [_pressure_line(spec, args.s)]
    else:
        if args.s_from is None or args.s_to is None or args.step is None:
            raise ParseError("provide either --s or all of --from/--to/--step")
        if args.step <= 0:
            raise ParseError(f"--step must be positive, got {args.step}")
        values = []
        s = args.s_from
        while s <= args.s_to + 1e-12:
            values.append(_pressure_line(spec, s))
            s += args.step
    if args.csv:
        print("s,pressure,branch")
        for s, value, branch in values:
            print(f"{s:.17g},{value:.17g},{branch}")
    else:
        for s, value, branch in values:
            print(f"s = {s:<10.6g} pressure = {value:<22.16g} [{branch}]")
    return EXIT_OK


def _cmd_oracle(args) -> int:
    spec = _load_spec(args.spec)
    estimate = pressure_estimate(spec.linear_parts, args.s, args.depth)
    formula = pressure(spec.linear_parts, args.s).value
    gap = math.exp(estimate.value) - math.exp(formula)
    print(f"depth:            {estimate.depth} ({estimate.word_count} words)")
    print(f"oracle estimate:  {estimate.value:.16g}")
    print(f"formula value:    {formula:.16g}")
    print(f"gap (exp scale):  {gap:.6g}")
    return EXIT_OK


def _cmd_render(args) -> int:
    spec = _load_spec(args.spec)
    try:
        viewport = tuple(float(v) for v in args.viewport.split(","))
    except ValueError as exc:
        raise ParseError(f"bad viewport {args.viewport!r}; expected x0,y0,x1,y1") from exc
    if len(viewport) != 4:
        raise ParseError(f"viewport needs 4 numbers, got {len(viewport)}")
    config = RenderConfig(
        width=args.width,
        height=args.height,
        iterations=args.iterations,
        burn_in=args.burn_in,
        seed=args.seed,
        viewport=viewport,
    )
    lit = render_to_file(spec, config, args.out)
    print(f"wrote {args.out} ({args.width}x{args.height}, {lit} lit pixels)")
    return EXIT_OK


def _cmd_examples(args) -> int:
    for name, spec in sorted(builtin_examples().items()):
        label = f"  {spec.label}" if spec.label else ""
        print(f"{name}: {len(spec.maps)} maps in dimension {spec.dim}{label}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boxdim",
        description="Pressure and affinity dimension of box-like self-affine systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_dim = sub.add_parser("dim", help="solve for the affinity dimension (or the modified one with --t)")
    p_dim.add_argument("spec", help="path to a system document, or a built-in name")
    p_dim.add_argument("--t", type=float, default=None, help="axis-projection box dimension for the modified solver")
    p_dim.add_argument("--json", action="store_true", help="machine-readable output")
    p_dim.set_defaults(func=_cmd_dim)

    p_pr = sub.add_parser("pressure", help="evaluate the pressure at one s or over a grid")
    p_pr.add_argument("spec")
    p_pr.add_argument("--s", type=float, default=None, help="single exponent")
    p_pr.add_argument("--from", dest="s_from", type=float, default=None, help="grid start")
    p_pr.add_argument("--to", dest="s_to", type=float, default=None, help="grid end (inclusive)")
    p_pr.add_argument("--step", type=float, default=None, help="grid step")
    p_pr.add_argument("--csv", action="store_true", help="emit CSV rows (s, pressure, branch)")
    p_pr.set_defaults(func=_cmd_pressure)

    p_or = sub.add_parser("oracle", help="compare the formula against exhaustive word enumeration")
    p_or.add_argument("spec")
    p_or.add_argument("--s", type=float, required=True)
    p_or.add_argument("--depth", type=int, required=True)
    p_or.set_defaults(func=_cmd_oracle)

    p_re = sub.add_parser("render", help="chaos-game attractor image (PPM)")
    p_re.add_argument("spec")
    p_re.add_argument("--out", required=True, help="output PPM path")
    p_re.add_argument("--width", type=int, default=800)
    p_re.add_argument("--height", type=int, default=800)
    p_re.add_argument("--iterations", type=int, default=1_000_000)
    p_re.add_argument("--burn-in", dest="burn_in", type=int, default=100)
    p_re.add_argument("--seed", type=int, default=1)
    p_re.add_argument("--viewport", default="0,0,1,1", help="x0,y0,x1,y1 in ambient coordinates")
    p_re.set_defaults(func=_cmd_render)

    p_ex = sub.add_parser("examples", help="list built-in systems")
    p_ex.set_defaults(func=_cmd_examples)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except NumericError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
