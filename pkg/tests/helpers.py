"""Shared generators and comparison helpers for the test suite."""

from __future__ import annotations

import numpy as np

from boxdim import GenPermMatrix, lifted_sum


def rel_close(a: float, b: float, tol: float) -> bool:
    scale = max(abs(a), abs(b), 1e-300)
    return abs(a - b) <= tol * scale


def random_genperm(d: int, rng: np.random.Generator, lo: float = 0.2, hi: float = 0.85) -> GenPermMatrix:
    """Random contractive generalized permutation matrix with signed scalars."""
    perm = rng.permutation(d) + 1
    scalars = rng.uniform(lo, hi, size=d) * rng.choice([-1.0, 1.0], size=d)
    return GenPermMatrix(d, tuple(int(p) for p in perm), tuple(float(x) for x in scalars))


def random_system(rng: np.random.Generator, n_maps: int, d: int, lo: float = 0.2, hi: float = 0.85):
    return [random_genperm(d, rng, lo, hi) for _ in range(n_maps)]


def is_primitive(matrix: np.ndarray) -> bool:
    """Wielandt test: M is primitive iff M^(n^2-2n+2) is entrywise positive."""
    n = matrix.shape[0]
    power = n * n - 2 * n + 2
    acc = np.eye(n, dtype=np.uint8)
    base = (matrix > 0).astype(np.uint8)
    while power:
        if power & 1:
            acc = ((acc @ base) > 0).astype(np.uint8)
        base = ((base @ base) > 0).astype(np.uint8)
        power >>= 1
    return bool(acc.all())


def random_mixing_system(rng: np.random.Generator, n_maps: int, d: int, lo: float = 0.55, hi: float = 0.8):
    """Random system whose lifted sums are all primitive.

    Primitivity makes the word sums converge geometrically to the
    spectral radius, which is the regime the finite-depth oracle
    comparisons are calibrated for.
    """
    while True:
        maps = random_system(rng, n_maps, d, lo, hi)
        if all(is_primitive(lifted_sum(maps, k + 0.5).entries) for k in range(d)):
            return maps
