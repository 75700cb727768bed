"""Chaos-game rendering of two-dimensional attractors to PPM images.

The orbit starts at the viewport center, repeatedly applies a uniformly
random map, discards a burn-in prefix and marks the pixel under every
remaining point.  Output is a binary PPM (P6) with black points on
white, chosen because it is bit-exact and dependency-free: identical
seed and configuration reproduce the file byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidRenderConfig, UnsupportedDimension
from .ifs_io import IFSSpec

__all__ = ["RenderConfig", "chaos_game_grid", "write_ppm", "render_to_file"]


@dataclass(frozen=True)
class RenderConfig:
    width: int = 800
    height: int = 800
    iterations: int = 1_000_000
    burn_in: int = 100
    seed: int = 1
    # (x0, y0, x1, y1); both examples live in the unit square
    viewport: tuple[float, float, float, float] = (0.0, 0.0, 1.0, 1.0)

    def __post_init__(self) -> None:
        if self.width < 1 or self.height < 1:
            raise InvalidRenderConfig(f"image size {self.width}x{self.height} must be at least 1x1")
        if not 0 <= self.burn_in < self.iterations:
            raise InvalidRenderConfig(
                f"need iterations > burn_in >= 0, got {self.iterations} and {self.burn_in}"
            )
        x0, y0, x1, y1 = self.viewport
        if not (x1 > x0 and y1 > y0):
            raise InvalidRenderConfig(f"viewport {self.viewport} has empty extent")


def chaos_game_grid(spec: IFSSpec, config: RenderConfig) -> np.ndarray:
    """Boolean hit grid of shape (height, width); row 0 is the top."""
    if spec.dim != 2:
        raise UnsupportedDimension(f"rendering needs dimension 2, got {spec.dim}")

    # Unpack each map into flat coefficients; a 2x2 generalized
    # permutation matrix either scales the axes or swaps them.
    actions = []
    for m in spec.maps:
        swap = m.linear.perm == (2, 1)
        s0, s1 = m.linear.scalars
        v0, v1 = m.translation
        actions.append((swap, s0, s1, v0, v1))

    rng = np.random.default_rng(config.seed)
    choices = rng.integers(0, len(actions), size=config.iterations).tolist()

    x0, y0, x1, y1 = config.viewport
    sx = config.width / (x1 - x0)
    sy = config.height / (y1 - y0)
    w, h = config.width, config.height
    burn_in = config.burn_in

    grid = np.zeros((h, w), dtype=bool)
    x = (x0 + x1) / 2.0
    y = (y0 + y1) / 2.0
    for step, idx in enumerate(choices):
        swap, s0, s1, v0, v1 = actions[idx]
        if swap:
            x, y = s1 * y + v0, s0 * x + v1
        else:
            x, y = s0 * x + v0, s1 * y + v1
        if step < burn_in:
            continue
        px = int((x - x0) * sx)
        py = int((y - y0) * sy)
        if 0 <= px < w and 0 <= py < h:
            grid[h - 1 - py, px] = True
    return grid


def write_ppm(grid: np.ndarray, path: str) -> None:
    """Write a hit grid as a binary PPM (P6), black on white."""
    h, w = grid.shape
    pixels = np.full((h, w, 3), 255, dtype=np.uint8)
    pixels[grid] = 0
    with open(path, "wb") as fh:
        fh.write(f"P6\n{w} {h}\n255\n".encode("ascii"))
        fh.write(pixels.tobytes())


def render_to_file(spec: IFSSpec, config: RenderConfig, path: str) -> int:
    """Render and write; returns the number of lit pixels."""
    grid = chaos_game_grid(spec, config)
    write_ppm(grid, path)
    return int(grid.sum())
