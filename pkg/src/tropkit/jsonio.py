"""Problem-file schemas and canonical JSON output.

Scalars serialize as numbers with null for bottom; vectors as arrays of
numbers (null forbidden); functionals and matrix rows as arrays of
numbers-or-null.  Output formatting is deterministic: insertion-ordered
keys, floats at 17 significant digits, and "-0" normalized to "0".
"""

from __future__ import annotations

import json
import math
from typing import Sequence

from .convex import TropicalPolytope
from .errors import DimensionMismatch
from .maps import MapExpr, TropicalLinear, parse_coordinate_map
from .semiring import BOTTOM, Scalar, is_bottom
from .space import Functional, Vector, as_functional, as_vector


class SchemaError(ValueError):
    """Input file or inline argument does not match the expected schema."""


def _fmt_float(v: float) -> str:
    if v != v or math.isinf(v):
        raise ValueError(f"cannot serialize non-finite float {v!r}")
    text = format(v, ".17g")
    return "0" if text == "-0" else text


def canonical_dumps(value) -> str:
    """Single-line JSON with deterministic float formatting."""
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _fmt_float(value)
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, dict):
        items = ", ".join(f"{json.dumps(k)}: {canonical_dumps(v)}" for k, v in value.items())
        return "{" + items + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(canonical_dumps(v) for v in value) + "]"
    raise TypeError(f"cannot serialize {value!r}")


def _require(obj: dict, key: str, context: str):
    if not isinstance(obj, dict) or key not in obj:
        raise SchemaError(f"{context}: missing key {key!r}")
    return obj[key]


def parse_vector(obj, context: str = "vector") -> Vector:
    if not isinstance(obj, list):
        raise SchemaError(f"{context}: expected an array")
    try:
        return as_vector(obj)
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"{context}: {exc}") from exc


def parse_scalar_row(obj, context: str) -> tuple[Scalar, ...]:
    if not isinstance(obj, list):
        raise SchemaError(f"{context}: expected an array")
    out = []
    for v in obj:
        if v is None:
            out.append(BOTTOM)
        elif isinstance(v, bool) or not isinstance(v, (int, float)):
            raise SchemaError(f"{context}: entries must be numbers or null")
        elif not math.isfinite(float(v)):
            raise SchemaError(f"{context}: entries must be finite")
        else:
            out.append(float(v))
    return tuple(out)


def parse_polytope(obj) -> TropicalPolytope:
    dim = _require(obj, "dim", "polytope")
    gens = _require(obj, "generators", "polytope")
    if not isinstance(dim, int) or dim < 1:
        raise SchemaError(f"polytope: dim must be a positive integer, got {dim!r}")
    if not isinstance(gens, list) or not gens:
        raise SchemaError("polytope: generators must be a nonempty array")
    rows = []
    for i, g in enumerate(gens):
        row = parse_vector(g, f"generator {i}")
        if len(row) != dim:
            raise SchemaError(f"generator {i} has {len(row)} entries, dim is {dim}")
        rows.append(row)
    return TropicalPolytope(tuple(rows))


def parse_functionals(obj, dim: int) -> list[Functional]:
    if not isinstance(obj, list) or not obj:
        raise SchemaError("functionals must be a nonempty array")
    out = []
    for i, row in enumerate(obj):
        coeffs = parse_scalar_row(row, f"functional {i}")
        if len(coeffs) != dim:
            raise SchemaError(f"functional {i} has {len(coeffs)} entries, dim is {dim}")
        try:
            out.append(as_functional(coeffs))
        except ValueError as exc:
            raise SchemaError(f"functional {i}: {exc}") from exc
    return out


def parse_matrix(obj, context: str = "matrix") -> TropicalLinear:
    if not isinstance(obj, list) or not obj:
        raise SchemaError(f"{context}: expected a nonempty array of rows")
    rows = tuple(parse_scalar_row(row, f"{context} row {i}") for i, row in enumerate(obj))
    try:
        return TropicalLinear(rows)
    except (ValueError, DimensionMismatch) as exc:
        raise SchemaError(f"{context}: {exc}") from exc


def parse_map(obj, dim: int) -> MapExpr:
    kind = _require(obj, "type", "map")
    if kind == "tropical_linear":
        mat = parse_matrix(_require(obj, "matrix", "map"))
        if mat.dim != dim:
            raise SchemaError(f"map matrix is {mat.dim}x{mat.dim}, dim is {dim}")
        return mat
    if kind == "expr":
        coords = _require(obj, "coords", "map")
        if not isinstance(coords, list) or not all(isinstance(c, str) for c in coords):
            raise SchemaError("map coords must be an array of strings")
        if len(coords) != dim:
            raise SchemaError(f"map has {len(coords)} coordinates, dim is {dim}")
        try:
            return parse_coordinate_map(coords, dim)
        except Exception as exc:
            raise SchemaError(f"map expression: {exc}") from exc
    raise SchemaError(f"unknown map type {kind!r}")


def matrix_to_json(m: TropicalLinear) -> list[list]:
    return [[None if is_bottom(v) else v for v in row] for row in m.matrix]


def scalars_to_json(values: Sequence[Scalar]) -> list:
    return [None if is_bottom(v) else v for v in values]


def load_json_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise SchemaError(f"{path}: top-level value must be an object")
    return obj
