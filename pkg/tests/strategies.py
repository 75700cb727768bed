"""Hypothesis strategies for generalized permutation matrices."""

from __future__ import annotations

import hypothesis.strategies as st

from boxdim import GenPermMatrix

signed_scalars = st.tuples(
    st.sampled_from([-1.0, 1.0]),
    st.floats(min_value=1e-2, max_value=1e2, allow_nan=False, allow_infinity=False),
).map(lambda p: p[0] * p[1])

contractive_scalars = st.tuples(
    st.sampled_from([-1.0, 1.0]),
    st.floats(min_value=0.05, max_value=0.95, allow_nan=False, allow_infinity=False),
).map(lambda p: p[0] * p[1])


@st.composite
def genperm_matrices(draw, dims=(1, 2, 3, 4), scalars=signed_scalars):
    d = draw(st.sampled_from(dims))
    perm = tuple(draw(st.permutations(range(1, d + 1))))
    values = tuple(draw(st.lists(scalars, min_size=d, max_size=d)))
    return GenPermMatrix(d, perm, values)


@st.composite
def genperm_pairs(draw, dims=(1, 2, 3, 4), scalars=signed_scalars):
    """Two matrices of the same dimension."""
    d = draw(st.sampled_from(dims))
    a = draw(genperm_matrices(dims=(d,), scalars=scalars))
    b = draw(genperm_matrices(dims=(d,), scalars=scalars))
    return a, b
