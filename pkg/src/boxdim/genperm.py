"""Exact algebra of generalized permutation matrices.

A generalized permutation matrix has exactly one nonzero entry in every
row and every column.  We store it as a permutation plus scalars: the
matrix sends basis vector e_j to ``scalars[j-1] * e_{perm[j-1]}``.  In
this representation products, singular values and the singular value
function are all cheap and exact up to floating-point rounding, with no
dense linear algebra involved.
"""

from __future__ import annotations

import math
from dataclasses import InitVar, dataclass

import numpy as np

from .errors import DimensionMismatch, NegativeExponent, NotGeneralizedPermutation

__all__ = [
    "GenPermMatrix",
    "identity",
    "from_dense",
    "to_dense",
    "multiply",
    "singular_values",
    "abs_determinant",
    "singular_value_function",
]

# Entries smaller than this fraction of the largest absolute entry are
# treated as zero when recognizing a dense matrix.
_DENSE_ZERO_REL_TOL = 1e-14


@dataclass(frozen=True)
class GenPermMatrix:
    """Permutation-plus-scalars form of a generalized permutation matrix.

    ``perm`` holds 1-indexed images: entry j (0-based j-1) is the row
    receiving column j's unique nonzero entry, whose value is
    ``scalars[j-1]``.  Scalars must be nonzero and finite, so every
    instance is invertible.

    ``validate=False`` skips the invariant checks; it is reserved for
    internal construction of values that are valid by closure (products
    and lifts of already-validated matrices).
    """

    dim: int
    perm: tuple[int, ...]
    scalars: tuple[float, ...]
    validate: InitVar[bool] = True

    def __post_init__(self, validate: bool) -> None:
        if not validate:
            return
        object.__setattr__(self, "dim", int(self.dim))
        object.__setattr__(self, "perm", tuple(int(p) for p in self.perm))
        object.__setattr__(self, "scalars", tuple(float(x) for x in self.scalars))
        d = self.dim
        if d < 1:
            raise NotGeneralizedPermutation(f"dimension must be positive, got {d}")
        if len(self.perm) != d or len(self.scalars) != d:
            raise NotGeneralizedPermutation(
                f"need {d} permutation images and {d} scalars, "
                f"got {len(self.perm)} and {len(self.scalars)}"
            )
        if sorted(self.perm) != list(range(1, d + 1)):
            raise NotGeneralizedPermutation(f"perm {self.perm} is not a bijection on 1..{d}")
        for j, x in enumerate(self.scalars, start=1):
            if x == 0.0 or not math.isfinite(x):
                raise NotGeneralizedPermutation(f"scalar for column {j} is {x}; must be nonzero and finite")

    @property
    def operator_norm(self) -> float:
        """Largest singular value, i.e. the largest absolute scalar."""
        return max(abs(x) for x in self.scalars)


def identity(dim: int) -> GenPermMatrix:
    return GenPermMatrix(dim, tuple(range(1, dim + 1)), (1.0,) * dim)


def from_dense(matrix) -> GenPermMatrix:
    """Recognize a dense square matrix as a generalized permutation matrix.

    Raises NotGeneralizedPermutation when some row or column does not
    carry exactly one nonzero entry.  Entries below 1e-14 times the
    largest absolute entry count as zero, so round-tripped matrices with
    tiny arithmetic noise are still accepted.
    """
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotGeneralizedPermutation(f"expected a square matrix, got shape {m.shape}")
    d = m.shape[0]
    max_abs = float(np.max(np.abs(m))) if m.size else 0.0
    if max_abs == 0.0:
        raise NotGeneralizedPermutation("zero matrix has empty rows")
    tol = _DENSE_ZERO_REL_TOL * max_abs
    nonzero = np.abs(m) >= tol

    perm = []
    scalars = []
    for j in range(d):
        rows = np.flatnonzero(nonzero[:, j])
        if len(rows) != 1:
            raise NotGeneralizedPermutation(f"column {j + 1} has {len(rows)} nonzero entries, expected 1")
        perm.append(int(rows[0]) + 1)
        scalars.append(float(m[rows[0], j]))
    for i in range(d):
        count = int(nonzero[i, :].sum())
        if count != 1:
            raise NotGeneralizedPermutation(f"row {i + 1} has {count} nonzero entries, expected 1")
    return GenPermMatrix(d, tuple(perm), tuple(scalars))


def to_dense(a: GenPermMatrix) -> np.ndarray:
    """Dense realization; inverse of from_dense."""
    m = np.zeros((a.dim, a.dim))
    for j in range(a.dim):
        m[a.perm[j] - 1, j] = a.scalars[j]
    return m


def multiply(a: GenPermMatrix, b: GenPermMatrix) -> GenPermMatrix:
    """Product a @ b in permutation-plus-scalars form.

    The product sends e_j through b then a, so its permutation is the
    composition of the two and its column-j scalar is
    ``a.scalars[b.perm[j]-1] * b.scalars[j]``.  The result is valid by
    closure of the group, so invariant checks are skipped.
    """
    if a.dim != b.dim:
        raise DimensionMismatch(f"cannot multiply dimensions {a.dim} and {b.dim}")
    ap, asc = a.perm, a.scalars
    perm = tuple(ap[p - 1] for p in b.perm)
    scalars = tuple(asc[p - 1] * x for p, x in zip(b.perm, b.scalars))
    return GenPermMatrix(a.dim, perm, scalars, validate=False)


def singular_values(a: GenPermMatrix) -> tuple[float, ...]:
    """Absolute scalars in descending order.

    The largest is the operator norm and the product is |det|.
    """
    return tuple(sorted((abs(x) for x in a.scalars), reverse=True))


def abs_determinant(a: GenPermMatrix) -> float:
    out = 1.0
    for x in a.scalars:
        out *= abs(x)
    return out


def singular_value_function(a: GenPermMatrix, s: float) -> float:
    """Evaluate the singular value function at exponent s >= 0.

    For 0 <= s <= d this is the product of the ceil(s) largest singular
    values with the last one raised to the fractional part of s; for
    s >= d it is |det|^(s/d).  The two branches agree at s = d, and at
    integer s the fractional factor degenerates to 1, so the function is
    continuous in s.
    """
    if s < 0:
        raise NegativeExponent(f"exponent must be nonnegative, got {s}")
    d = a.dim
    if s >= d:
        return abs_determinant(a) ** (s / d)
    sv = sorted((abs(x) for x in a.scalars), reverse=True)
    k = math.floor(s)
    out = 1.0
    for v in sv[:k]:
        out *= v
    if s > k:
        out *= sv[k] ** (s - k)
    return out
