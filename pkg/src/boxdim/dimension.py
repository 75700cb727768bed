"""Root-finding layers on top of the pressure function.

The affinity dimension is the unique zero of the pressure, which is
continuous and strictly decreasing for contractive systems.  Bisection
is therefore unconditionally safe; a short secant polish restores fast
local convergence at the target tolerance.  In two dimensions the three
closed-form case matrices give a faster path that also reports which
case held.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import (
    ConvergenceFailure,
    DimensionMismatch,
    EmptySystem,
    InvalidT,
    NoRootInRange,
    NotContractive,
    UnsupportedDimension,
)
from .genperm import GenPermMatrix
from .pressure import NonnegMatrix, modified_pressure, pressure, spectral_radius

__all__ = [
    "DimensionResult",
    "affinity_dimension",
    "affinity_dimension_2d",
    "modified_affinity_dimension",
    "has_unit_eigenvalue",
]

_BISECT_WIDTH = 1e-13
_SECANT_STEPS = 5
_RESIDUAL_TOL = 1e-12
_ENDPOINT_SLACK = 1e-12


@dataclass(frozen=True)
class DimensionResult:
    """Solved dimension with a diagnostic trace.

    ``branch`` records which formula pinned the root: "general" or
    "determinant" for the generic solver, "lifted_k0" / "lifted_k1" /
    "determinant" for the two-dimensional case split, "modified" for the
    weighted-pressure solver, and "degenerate_zero" for one-map systems
    whose pressure vanishes at s = 0 exactly.
    """

    value: float
    branch: str
    residual: float
    iterations: int
    bracket: tuple[float, float]


def _check_contractive(maps: Sequence[GenPermMatrix]) -> None:
    if len(maps) == 0:
        raise EmptySystem("need at least one map")
    for i, a in enumerate(maps):
        if a.operator_norm >= 1.0:
            raise NotContractive(f"map {i + 1} has operator norm {a.operator_norm} >= 1")


def _degenerate_zero() -> DimensionResult:
    return DimensionResult(0.0, "degenerate_zero", 0.0, 0, (0.0, 0.0))


def _solve_decreasing(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    flo: float,
    fhi: float,
) -> tuple[float, float, int, tuple[float, float]]:
    """Root of a continuous decreasing f with f(lo) >= 0 >= f(hi).

    Bisects to a bracket of width 1e-13, then polishes with a handful of
    secant steps that keep the bracket.  Returns the best iterate, its
    residual, the evaluation count and the final bracket.
    """
    # Tolerate endpoint values that sit on the root up to solver noise.
    if flo < 0.0:
        if flo > -_ENDPOINT_SLACK:
            return lo, abs(flo), 0, (lo, lo)
        raise ConvergenceFailure(f"no sign change: f({lo})={flo} < 0")
    if fhi > 0.0:
        if fhi < _ENDPOINT_SLACK:
            return hi, abs(fhi), 0, (hi, hi)
        raise ConvergenceFailure(f"no sign change: f({hi})={fhi} > 0")

    iterations = 0
    while hi - lo > _BISECT_WIDTH:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = f(mid)
        iterations += 1
        if fm > 0.0:
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm

    best, fbest = (lo, flo) if abs(flo) <= abs(fhi) else (hi, fhi)
    for _ in range(_SECANT_STEPS):
        denom = fhi - flo
        if denom == 0.0:
            break
        x = hi - fhi * (hi - lo) / denom
        if not lo <= x <= hi:
            break
        fx = f(x)
        iterations += 1
        if abs(fx) < abs(fbest):
            best, fbest = x, fx
        if fx > 0.0:
            lo, flo = x, fx
        elif fx < 0.0:
            hi, fhi = x, fx
        else:
            break
    # The best iterate may predate the last bracket update; widen so the
    # reported interval always contains it.
    return best, abs(fbest), iterations, (min(lo, best), max(hi, best))


def _grow_upper_bracket(f: Callable[[float], float], hi: float) -> tuple[float, float]:
    """Double hi until f goes negative; guaranteed for contractive systems."""
    fhi = f(hi)
    for _ in range(64):
        if fhi < 0.0:
            return hi, fhi
        hi *= 2.0
        fhi = f(hi)
    raise ConvergenceFailure("pressure did not become negative; system may not be contractive")


def affinity_dimension(maps: Sequence[GenPermMatrix]) -> DimensionResult:
    """Unique exponent at which the pressure vanishes.

    Requires every map to be contractive.  A one-map system has
    pressure log 1 = 0 already at s = 0, which is reported as the
    degenerate zero-dimension case rather than an error.
    """
    _check_contractive(maps)
    if len(maps) == 1:
        return _degenerate_zero()
    d = maps[0].dim

    def f(s: float) -> float:
        return pressure(maps, s).value

    lo, flo = 0.0, math.log(len(maps))
    hi, fhi = _grow_upper_bracket(f, float(d))
    value, residual, iterations, bracket = _solve_decreasing(f, lo, hi, flo, fhi)
    branch = "determinant" if value >= d else "general"
    return DimensionResult(value, branch, residual, iterations, bracket)


def _split_2d(maps: Sequence[GenPermMatrix]) -> tuple[list[tuple[float, float]], list[tuple[float, float]]]:
    """Absolute scalar pairs: (|a|, |d|) for diagonal maps, (|b|, |c|) for antidiagonal."""
    diag: list[tuple[float, float]] = []
    anti: list[tuple[float, float]] = []
    for a in maps:
        if a.dim != 2:
            raise UnsupportedDimension(f"two-dimensional solver got dimension {a.dim}")
        if a.perm == (1, 2):
            diag.append((abs(a.scalars[0]), abs(a.scalars[1])))
        else:
            # ((0, b), (c, 0)) stores scalars (c, b)
            anti.append((abs(a.scalars[1]), abs(a.scalars[0])))
    return diag, anti


def _case1_matrix(diag, anti, s: float) -> NonnegMatrix:
    return NonnegMatrix(
        np.array(
            [
                [sum(a**s for a, _ in diag), sum(b**s for b, _ in anti)],
                [sum(c**s for _, c in anti), sum(d**s for _, d in diag)],
            ]
        )
    )


def _case2_matrix(diag, anti, s: float) -> NonnegMatrix:
    return NonnegMatrix(
        np.array(
            [
                [
                    sum(a * d ** (s - 1) for a, d in diag),
                    sum(b * c ** (s - 1) for b, c in anti),
                ],
                [
                    sum(b ** (s - 1) * c for b, c in anti),
                    sum(a ** (s - 1) * d for a, d in diag),
                ],
            ]
        )
    )


def affinity_dimension_2d(maps: Sequence[GenPermMatrix]) -> DimensionResult:
    """Three-case closed-form solver for two-dimensional systems.

    Picks the case by checking the single-exponent matrix at s = 1 and
    the determinant sum at s = 2, then solves the matching spectral
    radius (or determinant-sum) equation on its bracket.  Agrees with
    affinity_dimension but reports which case held.
    """
    _check_contractive(maps)
    diag, anti = _split_2d(maps)
    if len(maps) == 1:
        return _degenerate_zero()
    dets = [a * d for a, d in diag] + [b * c for b, c in anti]

    if spectral_radius(_case1_matrix(diag, anti, 1.0)) < 1.0:
        f1 = lambda s: math.log(spectral_radius(_case1_matrix(diag, anti, s)))
        value, residual, iterations, bracket = _solve_decreasing(
            f1, 0.0, 1.0, math.log(len(maps)), f1(1.0)
        )
        return DimensionResult(value, "lifted_k0", residual, iterations, bracket)

    det_sum = math.fsum(dets)
    if det_sum <= 1.0:
        f2 = lambda s: math.log(spectral_radius(_case2_matrix(diag, anti, s)))
        value, residual, iterations, bracket = _solve_decreasing(f2, 1.0, 2.0, f2(1.0), f2(2.0))
        return DimensionResult(value, "lifted_k1", residual, iterations, bracket)

    f3 = lambda s: math.log(math.fsum(det ** (s / 2.0) for det in dets))
    hi, fhi = _grow_upper_bracket(f3, 4.0)
    value, residual, iterations, bracket = _solve_decreasing(f3, 2.0, hi, math.log(det_sum), fhi)
    return DimensionResult(value, "determinant", residual, iterations, bracket)


def has_unit_eigenvalue(m) -> bool:
    """True when a 2x2 matrix has 1 as an eigenvalue.

    Uses the characteristic-polynomial identity 1 + det = trace, checked
    to 1e-12 absolute.
    """
    a = np.asarray(m, dtype=float)
    if a.shape != (2, 2):
        raise UnsupportedDimension(f"expected a 2x2 matrix, got shape {a.shape}")
    det = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
    tr = a[0, 0] + a[1, 1]
    return abs(1.0 + det - tr) <= 1e-12


def modified_affinity_dimension(maps: Sequence[GenPermMatrix], t: float) -> DimensionResult:
    """Zero of the modified pressure inside [t, 2t].

    ``t`` is the box dimension of the axis projections and is supplied
    by the caller.  When the modified pressure has the same sign at both
    endpoints there is no zero in range and NoRootInRange is raised.
    At t = 1 the result is the affinity dimension.
    """
    if not 0 < t <= 1:
        raise InvalidT(f"need 0 < t <= 1, got {t}")
    _check_contractive(maps)
    for a in maps:
        if a.dim != 2:
            raise UnsupportedDimension(f"modified pressure is two-dimensional, got dimension {a.dim}")

    def g(s: float) -> float:
        return modified_pressure(maps, s, t)

    g_lo, g_hi = g(t), g(2.0 * t)
    if g_lo < -_ENDPOINT_SLACK or g_hi > _ENDPOINT_SLACK:
        raise NoRootInRange(
            f"modified pressure has no zero in [{t}, {2 * t}]: "
            f"endpoint values {g_lo:.6g} and {g_hi:.6g}"
        )
    value, residual, iterations, bracket = _solve_decreasing(g, t, 2.0 * t, g_lo, g_hi)
    return DimensionResult(value, "modified", residual, iterations, bracket)
