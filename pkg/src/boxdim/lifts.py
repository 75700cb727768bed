"""Lifted generalized permutation matrices.

The pressure of a box-like system becomes an ordinary spectral radius
after lifting each linear part to a larger generalized permutation
matrix.  The lifted space is indexed by pairs (S, l) of a k-element
subset S of {1,..,d} and a leftover index l, and the lift acts on the
pair basis through the original permutation while its scalars multiply
the relevant absolute row scalars.  The lift is a group homomorphism
and its operator norm equals the singular value function, which is what
turns word sums into a spectral radius.

A second, two-dimensional lift weights the two singular directions with
separate exponents t and s-t; its spectral radius computes the modified
pressure used for box and packing dimension.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .errors import BasisMismatch, InvalidExponents, InvalidK, UnsupportedDimension
from .genperm import GenPermMatrix

__all__ = ["LiftBasis", "lift_basis", "lift_dimension", "lift_matrix", "lift_matrix_weighted"]


@dataclass(frozen=True)
class LiftBasis:
    """Canonical ordering of the (S, l) pairs indexing the lifted space.

    Pairs are sorted lexicographically on (sorted S, then l), so the
    basis, and hence every lifted matrix, is deterministic.
    """

    d: int
    k: int
    pairs: tuple[tuple[tuple[int, ...], int], ...]
    index: dict = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.pairs)


def lift_dimension(d: int, k: int) -> int:
    return (d - k) * math.comb(d, k)


@lru_cache(maxsize=None)
def lift_basis(d: int, k: int) -> LiftBasis:
    """All pairs (S, l) with |S| = k and l outside S, in canonical order."""
    if d < 1:
        raise InvalidK(f"dimension must be positive, got {d}")
    if not 0 <= k < d:
        raise InvalidK(f"need 0 <= k < d, got k={k}, d={d}")
    pairs = tuple(
        (subset, l)
        for subset in combinations(range(1, d + 1), k)
        for l in range(1, d + 1)
        if l not in subset
    )
    assert len(pairs) == lift_dimension(d, k)
    return LiftBasis(d, k, pairs, {pair: i for i, pair in enumerate(pairs)})


def lift_matrix(a: GenPermMatrix, s: float, basis: LiftBasis) -> GenPermMatrix:
    """Lift a generalized permutation matrix at exponent s.

    The pair (S, l) maps to (perm(S), perm(l)) with scalar
    prod_{j in S} |a_j| * |a_l|^(s-k).  Powers go through exp/log, which
    is safe because scalars are nonzero, and makes the exponent-zero
    case exact.  The exponent must satisfy k <= s <= k+1; the endpoints
    are allowed so that adjacent-k expressions can be compared at
    integer s.
    """
    if basis.d != a.dim:
        raise BasisMismatch(f"basis is for dimension {basis.d}, matrix has dimension {a.dim}")
    if not basis.k <= s <= basis.k + 1:
        raise BasisMismatch(f"basis k={basis.k} cannot evaluate exponent s={s}; need k <= s <= k+1")
    frac = s - basis.k
    perm = a.perm
    abs_scalars = [abs(x) for x in a.scalars]
    log_scalars = [math.log(x) for x in abs_scalars]

    n = len(basis.pairs)
    lifted_perm = [0] * n
    lifted_scalars = [0.0] * n
    for i, (subset, l) in enumerate(basis.pairs):
        w = math.exp(frac * log_scalars[l - 1])
        for j in subset:
            w *= abs_scalars[j - 1]
        image = (tuple(sorted(perm[j - 1] for j in subset)), perm[l - 1])
        lifted_perm[i] = basis.index[image] + 1
        lifted_scalars[i] = w
    return GenPermMatrix(n, tuple(lifted_perm), tuple(lifted_scalars), validate=False)


def lift_matrix_weighted(a: GenPermMatrix, s: float, t: float) -> GenPermMatrix:
    """Two-dimensional lift weighting the singular directions by t and s-t.

    Diagonal input diag(a, d) lifts to diag(|a|^t |d|^(s-t),
    |a|^(s-t) |d|^t); antidiagonal input maps to the antidiagonal matrix
    with the same two products crossed over.  Its operator norm is
    alpha_1^t * alpha_2^(s-t), and like the plain lift it is a group
    homomorphism.  At t = 1 it coincides with the k = 1 lift.
    """
    if a.dim != 2:
        raise UnsupportedDimension(f"weighted lift is only defined in dimension 2, got {a.dim}")
    if not 0 < t <= 1:
        raise InvalidExponents(f"need 0 < t <= 1, got t={t}")
    if not t <= s <= 2 * t:
        raise InvalidExponents(f"need t <= s <= 2t, got s={s}, t={t}")
    lx = math.log(abs(a.scalars[0]))
    ly = math.log(abs(a.scalars[1]))
    if a.perm == (1, 2):
        # diag(a, d): scalars (a, d)
        return GenPermMatrix(
            2,
            (1, 2),
            (math.exp(t * lx + (s - t) * ly), math.exp((s - t) * lx + t * ly)),
            validate=False,
        )
    # antidiagonal ((0, b), (c, 0)): scalars (c, b)
    return GenPermMatrix(
        2,
        (2, 1),
        (math.exp((s - t) * ly + t * lx), math.exp(t * ly + (s - t) * lx)),
        validate=False,
    )
