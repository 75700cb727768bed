"""Brute-force reference implementations used to cross-check the fast paths.

Everything here goes back to first principles: the pressure estimate
enumerates every word of a given length and sums the singular value
function of the exact products, and the dense singular value routine
diagonalizes A^T A with Jacobi rotations.  These are deliberately
independent of the lifted spectral-radius machinery so tests can compare
the two routes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DepthTooLarge, EmptySystem
from .genperm import GenPermMatrix, multiply, singular_value_function
from .pressure import _check_system

__all__ = ["OracleEstimate", "pressure_estimate", "dense_svals", "dense_product", "MAX_WORDS"]

MAX_WORDS = 10**8


@dataclass(frozen=True)
class OracleEstimate:
    """Finite-depth pressure estimate from exhaustive word enumeration.

    ``value`` is (1/depth) * log of the sum of the singular value
    function over all words of the given length.  By subadditivity the
    estimate never undershoots the true pressure, and doubling the depth
    never increases it.
    """

    depth: int
    value: float
    word_count: int


def pressure_estimate(maps: Sequence[GenPermMatrix], s: float, depth: int) -> OracleEstimate:
    """Exact enumeration of all words of the given length.

    Words are visited in lexicographic order with products built
    incrementally, one multiplication per tree node.  The sum is
    compensated so the result does not depend on how the work might be
    partitioned.
    """
    _check_system(maps)
    if depth < 1:
        raise DepthTooLarge(f"depth must be at least 1, got {depth}")
    n_words = len(maps) ** depth
    if n_words > MAX_WORDS:
        raise DepthTooLarge(f"{len(maps)}^{depth} = {n_words} words exceeds the {MAX_WORDS} guard")

    total = 0.0
    compensation = 0.0

    def walk(product: GenPermMatrix, level: int) -> None:
        nonlocal total, compensation
        if level == depth:
            y = singular_value_function(product, s) - compensation
            t = total + y
            compensation = (t - total) - y
            total = t
            return
        for a in maps:
            walk(multiply(a, product), level + 1)

    for a in maps:
        walk(a, 1)
    return OracleEstimate(depth, math.log(total) / depth, n_words)


def dense_product(a, b) -> np.ndarray:
    """Schoolbook matrix product; oracle for the permutation-form multiply."""
    am = np.asarray(a, dtype=float)
    bm = np.asarray(b, dtype=float)
    n, k = am.shape
    k2, m = bm.shape
    assert k == k2, "inner dimensions must agree"
    out = np.zeros((n, m))
    for i in range(n):
        for j in range(m):
            acc = 0.0
            for p in range(k):
                acc += am[i, p] * bm[p, j]
            out[i, j] = acc
    return out


def dense_svals(m) -> np.ndarray:
    """Singular values of a square matrix, descending.

    Diagonalizes A^T A with cyclic Jacobi rotations, sweeping until the
    off-diagonal norm falls below 1e-14 of the matrix norm, then takes
    nonnegative square roots of the diagonal.
    """
    a = np.asarray(m, dtype=float)
    assert a.ndim == 2 and a.shape[0] == a.shape[1], "expected a square matrix"
    b = a.T @ a
    n = b.shape[0]
    norm = np.linalg.norm(b)
    if norm == 0.0:
        return np.zeros(n)
    tol = 1e-14 * norm

    for _ in range(100):
        off = math.sqrt(max(0.0, np.sum(b * b) - np.sum(np.diag(b) ** 2)))
        if off <= tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(b[p, q]) <= tol / (n * n):
                    continue
                tau = (b[q, q] - b[p, p]) / (2.0 * b[p, q])
                t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                sn = t * c
                rot = np.eye(n)
                rot[p, p] = rot[q, q] = c
                rot[p, q] = sn
                rot[q, p] = -sn
                b = rot.T @ b @ rot
    return np.sqrt(np.clip(np.sort(np.diag(b))[::-1], 0.0, None))
