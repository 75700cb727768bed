"""Parsing, validation and serialization of box-like system documents.

A system document is JSON:

    {"dimension": d,
     "label": "optional text",
     "maps": [{"matrix": [[...], ...] | {"perm": [...], "scalars": [...]},
               "translation": [...]},
              ...]}

Matrices may be given densely or in permutation form (1-indexed images).
Every numeric slot also accepts an exact rational string such as
"13/27" or "-13/27", which is converted to the nearest double; inputs
with power-of-three denominators would otherwise lose digits that
matter at the tolerances used downstream.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DimensionMismatch,
    EmptySystem,
    NotContractive,
    NotGeneralizedPermutation,
    ParseError,
)
from .genperm import GenPermMatrix, from_dense

__all__ = ["AffineMapSpec", "IFSSpec", "parse_ifs", "serialize_ifs", "builtin_examples"]


@dataclass(frozen=True)
class AffineMapSpec:
    """One affine contraction: x -> linear @ x + translation."""

    linear: GenPermMatrix
    translation: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "translation", tuple(float(v) for v in self.translation))
        if len(self.translation) != self.linear.dim:
            raise DimensionMismatch(
                f"translation has length {len(self.translation)}, matrix dimension is {self.linear.dim}"
            )
        if self.linear.operator_norm >= 1.0:
            raise NotContractive(f"linear part has operator norm {self.linear.operator_norm} >= 1")


@dataclass(frozen=True)
class IFSSpec:
    """A validated iterated function system of box-like affine contractions."""

    dim: int
    maps: tuple[AffineMapSpec, ...]
    label: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "maps", tuple(self.maps))
        if len(self.maps) == 0:
            raise EmptySystem("system document contains no maps")
        for i, m in enumerate(self.maps):
            if m.linear.dim != self.dim:
                raise DimensionMismatch(f"map {i + 1} has dimension {m.linear.dim}, expected {self.dim}")

    @property
    def linear_parts(self) -> tuple[GenPermMatrix, ...]:
        return tuple(m.linear for m in self.maps)


def _to_float(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float, str)):
        raise ParseError(f"{where}: expected a number or rational string, got {value!r}")
    if isinstance(value, str):
        try:
            return float(Fraction(value))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"{where}: bad rational string {value!r}") from exc
    return float(value)


def _parse_matrix(obj, where: str) -> GenPermMatrix:
    if isinstance(obj, dict):
        if set(obj) != {"perm", "scalars"}:
            raise ParseError(f"{where}: matrix object must have exactly keys 'perm' and 'scalars'")
        perm = obj["perm"]
        scalars = obj["scalars"]
        if not isinstance(perm, list) or not all(isinstance(p, int) and not isinstance(p, bool) for p in perm):
            raise ParseError(f"{where}: 'perm' must be a list of integers")
        if not isinstance(scalars, list):
            raise ParseError(f"{where}: 'scalars' must be a list")
        values = tuple(_to_float(x, f"{where} scalars") for x in scalars)
        return GenPermMatrix(len(perm), tuple(perm), values)
    if isinstance(obj, list):
        rows = []
        for i, row in enumerate(obj):
            if not isinstance(row, list):
                raise ParseError(f"{where}: matrix row {i + 1} is not a list")
            rows.append([_to_float(x, f"{where} row {i + 1}") for x in row])
        if any(len(r) != len(rows) for r in rows):
            raise NotGeneralizedPermutation(f"{where}: matrix is not square")
        return from_dense(rows)
    raise ParseError(f"{where}: matrix must be a list of rows or a perm/scalars object")


def parse_ifs(text: str) -> IFSSpec:
    """Parse and validate a JSON system document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top-level document must be an object")
    if "dimension" not in doc or "maps" not in doc:
        raise ParseError("document needs 'dimension' and 'maps' keys")
    dim = doc["dimension"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ParseError(f"'dimension' must be a positive integer, got {dim!r}")
    label = doc.get("label")
    if label is not None and not isinstance(label, str):
        raise ParseError("'label' must be a string when present")
    if not isinstance(doc["maps"], list):
        raise ParseError("'maps' must be a list")
    if len(doc["maps"]) == 0:
        raise EmptySystem("document contains no maps")

    maps = []
    for i, entry in enumerate(doc["maps"]):
        where = f"map {i + 1}"
        if not isinstance(entry, dict) or "matrix" not in entry or "translation" not in entry:
            raise ParseError(f"{where}: each map needs 'matrix' and 'translation'")
        linear = _parse_matrix(entry["matrix"], where)
        if not isinstance(entry["translation"], list):
            raise ParseError(f"{where}: 'translation' must be a list")
        translation = tuple(_to_float(x, f"{where} translation") for x in entry["translation"])
        maps.append(AffineMapSpec(linear, translation))
    return IFSSpec(dim, tuple(maps), label)


def serialize_ifs(spec: IFSSpec) -> str:
    """JSON document that parses back to an identical system."""
    doc: dict = {"dimension": spec.dim}
    if spec.label is not None:
        doc["label"] = spec.label
    doc["maps"] = [
        {
            "matrix": {"perm": list(m.linear.perm), "scalars": list(m.linear.scalars)},
            "translation": list(m.translation),
        }
        for m in spec.maps
    ]
    return json.dumps(doc, indent=2)


_BUILTIN_DOCS = {
    "example1": """
    {
      "dimension": 2,
      "label": "two maps on the unit square: one reflected diagonal, one axis swap",
      "maps": [
        {"matrix": [["-13/27", "0"], ["0", "7/9"]], "translation": ["13/27", "2/9"]},
        {"matrix": [["0", "13/27"], ["7/9", "0"]], "translation": ["14/27", "0"]}
      ]
    }
    """,
    "example2": """
    {
      "dimension": 2,
      "label": "four maps on the unit square: two diagonal, two axis swaps",
      "maps": [
        {"matrix": [["1/3", "0"], ["0", "2/3"]], "translation": ["2/3", "0"]},
        {"matrix": [["-2/3", "0"], ["0", "-1/3"]], "translation": ["2/3", "1"]},
        {"matrix": [["0", "2/9"], ["-1/3", "0"]], "translation": ["2/3", "1"]},
        {"matrix": [["0", "4/9"], ["-1/3", "0"]], "translation": ["2/9", "2/3"]}
      ]
    }
    """,
}


def builtin_examples() -> dict[str, IFSSpec]:
    """Named ready-made systems, parsed through the ordinary document path."""
    return {name: parse_ifs(text) for name, text in _BUILTIN_DOCS.items()}
