"""Pressure of a box-like system via spectral radii of lifted sums.

For exponents strictly between 0 and the ambient dimension the pressure
equals the log spectral radius of the sum of the lifted linear parts.
At s = 0 it is log N, and from s = d onward the singular value function
collapses to a determinant power, so the pressure is a plain log-sum.
The three branches agree at the seams, keeping the function continuous.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, EmptySystem, NegativeExponent, ZeroSpectralRadius
from .genperm import GenPermMatrix, abs_determinant
from .lifts import lift_basis, lift_matrix, lift_matrix_weighted

__all__ = [
    "NonnegMatrix",
    "PressureValue",
    "spectral_radius",
    "lifted_sum",
    "pressure",
    "modified_pressure",
]

_SQUARING_TOL = 1e-14
_MAX_SQUARINGS = 200
# A reducible matrix can park the max entry in a sub-block whose radius
# lags the true one, producing exactly repeating estimates early on; the
# change-based stop is only trusted once the transient must have decayed.
_MIN_SQUARINGS = 50


@dataclass(frozen=True, eq=False)
class NonnegMatrix:
    """Dense square matrix with nonnegative finite entries."""

    entries: np.ndarray
    dim: int = 0

    def __post_init__(self) -> None:
        m = np.asarray(self.entries, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise ValueError("entries must be finite")
        if np.any(m < 0):
            raise ValueError("entries must be nonnegative")
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)
        object.__setattr__(self, "dim", m.shape[0])


@dataclass(frozen=True)
class PressureValue:
    """Pressure at one exponent, with the branch that produced it.

    ``branch`` is "zero_s" at s = 0, "lifted" for 0 < s < d (with ``k``
    the integer part of s) and "determinant" for s >= d.
    ``spectral_radius`` is populated on the lifted branch.
    """

    value: float
    branch: str
    k: int | None = None
    spectral_radius: float | None = None


def spectral_radius(m: NonnegMatrix) -> float:
    """Spectral radius of a nonnegative matrix.

    Dimensions 1 and 2 use closed forms.  Larger matrices use repeated
    squaring with max-entry rescaling: the log of M^(2^n)'s largest
    entry, divided by 2^n, converges to log rho geometrically in n, and
    rescaling keeps every intermediate entry representable.  This
    handles reducible matrices, where power iteration on a single
    vector can stall.
    """
    n = m.dim
    e = m.entries
    if n == 1:
        return float(e[0, 0])
    if n == 2:
        tr = e[0, 0] + e[1, 1]
        disc = (e[0, 0] - e[1, 1]) ** 2 + 4.0 * e[0, 1] * e[1, 0]
        return (tr + math.sqrt(disc)) / 2.0

    work = np.array(e, dtype=float)
    log_scale = 0.0
    estimate = None
    for step in range(1, _MAX_SQUARINGS + 1):
        peak = float(work.max())
        if peak == 0.0:
            return 0.0
        work /= peak
        log_scale += math.log(peak)
        work = work @ work
        log_scale *= 2.0
        peak = float(work.max())
        if peak == 0.0:
            return 0.0
        new_estimate = (log_scale + math.log(peak)) / 2.0**step
        if (
            step >= _MIN_SQUARINGS
            and estimate is not None
            and abs(new_estimate - estimate) < _SQUARING_TOL
        ):
            estimate = new_estimate
            break
        estimate = new_estimate
    return math.exp(estimate)


def _check_system(maps: Sequence[GenPermMatrix]) -> int:
    if len(maps) == 0:
        raise EmptySystem("need at least one map")
    d = maps[0].dim
    for i, a in enumerate(maps):
        if a.dim != d:
            raise DimensionMismatch(f"map {i + 1} has dimension {a.dim}, expected {d}")
    return d


def lifted_sum(maps: Sequence[GenPermMatrix], s: float, k: int | None = None) -> NonnegMatrix:
    """Sum of the lifted maps at exponent s, as a dense nonnegative matrix.

    ``k`` defaults to floor(s); passing it explicitly allows evaluating
    an adjacent lift at an integer boundary.
    """
    d = _check_system(maps)
    if k is None:
        k = math.floor(s)
    basis = lift_basis(d, k)
    n = len(basis)
    acc = np.zeros((n, n))
    for a in maps:
        lifted = lift_matrix(a, s, basis)
        for j in range(n):
            acc[lifted.perm[j] - 1, j] += lifted.scalars[j]
    return NonnegMatrix(acc)


def pressure(maps: Sequence[GenPermMatrix], s: float) -> PressureValue:
    """Pressure of the system at exponent s >= 0.

    Contraction is not required here; the formulas are total on
    invertible generalized permutation matrices.
    """
    d = _check_system(maps)
    if s < 0:
        raise NegativeExponent(f"exponent must be nonnegative, got {s}")
    if s == 0:
        return PressureValue(math.log(len(maps)), "zero_s")
    if s >= d:
        total = math.fsum(abs_determinant(a) ** (s / d) for a in maps)
        return PressureValue(math.log(total), "determinant")
    k = math.floor(s)
    rho = spectral_radius(lifted_sum(maps, s, k))
    if rho <= 0.0:
        # Cannot happen for valid inputs: every lifted scalar is positive.
        raise ZeroSpectralRadius(f"lifted sum at s={s} has spectral radius {rho}")
    return PressureValue(math.log(rho), "lifted", k=k, spectral_radius=rho)


def modified_pressure(maps: Sequence[GenPermMatrix], s: float, t: float) -> float:
    """Log spectral radius of the sum of weighted two-dimensional lifts.

    At t = 1 this equals the plain pressure for 1 <= s <= 2.
    """
    _check_system(maps)
    acc = np.zeros((2, 2))
    for a in maps:
        lifted = lift_matrix_weighted(a, s, t)
        for j in range(2):
            acc[lifted.perm[j] - 1, j] += lifted.scalars[j]
    rho = spectral_radius(NonnegMatrix(acc))
    if rho <= 0.0:
        raise ZeroSpectralRadius(f"weighted lifted sum at s={s}, t={t} has spectral radius {rho}")
    return math.log(rho)
