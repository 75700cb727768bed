#!/usr/bin/env python3
"""Render the attractors of the built-in systems to PPM images.

Usage: python scripts/render_figures.py [--outdir OUT] [--iterations N]
"""

import argparse
import pathlib

from boxdim import RenderConfig, builtin_examples, render_to_file


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default="out", help="output directory (created if missing)")
    parser.add_argument("--iterations", type=int, default=2_000_000)
    parser.add_argument("--size", type=int, default=1000, help="image width and height in pixels")
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    config = RenderConfig(width=args.size, height=args.size, iterations=args.iterations, seed=args.seed)
    for name, spec in sorted(builtin_examples().items()):
        path = outdir / f"{name}.ppm"
        lit = render_to_file(spec, config, str(path))
        print(f"wrote {path} ({args.size}x{args.size}, {lit} lit pixels)")


if __name__ == "__main__":
    main()
