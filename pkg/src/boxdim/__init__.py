"""Pressure and affinity dimension of box-like self-affine systems.

The linear parts of a box-like system are generalized permutation
matrices.  Lifting them turns the pressure into the log spectral radius
of a single nonnegative matrix, which makes the affinity dimension a
one-dimensional root find.  The package also ships an exhaustive
word-enumeration oracle for cross-checking, JSON system documents, and
a chaos-game attractor renderer.
"""

from .dimension import (
    DimensionResult,
    affinity_dimension,
    affinity_dimension_2d,
    has_unit_eigenvalue,
    modified_affinity_dimension,
)
from .genperm import (
    GenPermMatrix,
    abs_determinant,
    from_dense,
    identity,
    multiply,
    singular_value_function,
    singular_values,
    to_dense,
)
from .ifs_io import AffineMapSpec, IFSSpec, builtin_examples, parse_ifs, serialize_ifs
from .lifts import LiftBasis, lift_basis, lift_dimension, lift_matrix, lift_matrix_weighted
from .oracle import OracleEstimate, dense_product, dense_svals, pressure_estimate
from .pressure import (
    NonnegMatrix,
    PressureValue,
    lifted_sum,
    modified_pressure,
    pressure,
    spectral_radius,
)
from .render import RenderConfig, chaos_game_grid, render_to_file, write_ppm

__version__ = "0.1.0"

__all__ = [
    "AffineMapSpec",
    "DimensionResult",
    "GenPermMatrix",
    "IFSSpec",
    "LiftBasis",
    "NonnegMatrix",
    "OracleEstimate",
    "PressureValue",
    "RenderConfig",
    "abs_determinant",
    "affinity_dimension",
    "affinity_dimension_2d",
    "builtin_examples",
    "chaos_game_grid",
    "dense_product",
    "dense_svals",
    "from_dense",
    "has_unit_eigenvalue",
    "identity",
    "lift_basis",
    "lift_dimension",
    "lift_matrix",
    "lift_matrix_weighted",
    "lifted_sum",
    "modified_affinity_dimension",
    "modified_pressure",
    "multiply",
    "parse_ifs",
    "pressure",
    "pressure_estimate",
    "render_to_file",
    "serialize_ifs",
    "singular_value_function",
    "singular_values",
    "spectral_radius",
    "to_dense",
    "write_ppm",
]
