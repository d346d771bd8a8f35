"""Monotone self-map expressions.

Two map families share one evaluation entry point:

* ``TropicalLinear``: an n-by-n matrix acting by ``(A x)_i = max_j (A_ij + x_j)``,
  rows needing at least one finite entry so images stay finite.
* ``CoordinateMap``: one expression per output coordinate built from input
  coordinates, finite literals, constant shifts, and binary max/min.

Every map in either family is nondecreasing and commutes weakly with
uniform shifts (``f(x + r) <= f(x) + r`` for ``r >= 0``), hence
nonexpansive in the uniform metric.  The string grammar used in problem
files is ``max(...)``/``min(...)`` calls, coordinates ``x0..x{n-1}``, real
literals, and ``+``/``-`` with a literal on one side (a literal minus an
expression is rejected: it would not be monotone).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Union

from .errors import DimensionMismatch
from .semiring import Scalar, as_scalar, is_bottom
from .space import Vector


@dataclass(frozen=True)
class Coord:
    index: int


@dataclass(frozen=True)
class Const:
    value: float


@dataclass(frozen=True)
class Shift:
    base: "Expr"
    offset: float


@dataclass(frozen=True)
class Max:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Min:
    left: "Expr"
    right: "Expr"


Expr = Union[Coord, Const, Shift, Max, Min]


def eval_expr(e: Expr, x: Vector) -> float:
    if isinstance(e, Coord):
        return x[e.index]
    if isinstance(e, Const):
        return e.value
    if isinstance(e, Shift):
        return eval_expr(e.base, x) + e.offset
    if isinstance(e, Max):
        return max(eval_expr(e.left, x), eval_expr(e.right, x))
    if isinstance(e, Min):
        return min(eval_expr(e.left, x), eval_expr(e.right, x))
    raise TypeError(f"not an expression: {e!r}")


def _max_coord(e: Expr) -> int:
    if isinstance(e, Coord):
        return e.index
    if isinstance(e, Const):
        return -1
    if isinstance(e, Shift):
        return _max_coord(e.base)
    if isinstance(e, (Max, Min)):
        return max(_max_coord(e.left), _max_coord(e.right))
    raise TypeError(f"not an expression: {e!r}")


@dataclass(frozen=True)
class CoordinateMap:
    """A map given coordinatewise by expressions over ``input_dim`` inputs."""

    coords: tuple[Expr, ...]
    input_dim: int

    def __post_init__(self) -> None:
        if not self.coords:
            raise ValueError("a coordinate map needs at least one output")
        if self.input_dim < 1:
            raise ValueError("input dimension must be >= 1")
        for e in self.coords:
            if _max_coord(e) >= self.input_dim:
                raise DimensionMismatch(
                    f"expression uses coordinate x{_max_coord(e)} "
                    f"but the map has {self.input_dim} inputs"
                )


@dataclass(frozen=True)
class TropicalLinear:
    """Square max-plus matrix; entries are scalars (BOTTOM = no edge)."""

    matrix: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(as_scalar(v) for v in row) for row in self.matrix)
        n = len(rows)
        if n == 0:
            raise ValueError("empty matrix")
        for row in rows:
            if len(row) != n:
                raise DimensionMismatch("matrix must be square")
            if all(is_bottom(v) for v in row):
                raise ValueError("every matrix row needs a finite entry")
        object.__setattr__(self, "matrix", rows)

    @property
    def dim(self) -> int:
        return len(self.matrix)


MapExpr = Union[CoordinateMap, TropicalLinear]


def map_dims(f: MapExpr) -> tuple[int, int]:
    """(input_dim, output_dim) of a map."""
    if isinstance(f, TropicalLinear):
        return f.dim, f.dim
    return f.input_dim, len(f.coords)


def eval_map(f: MapExpr, x: Vector) -> Vector:
    """Evaluate a map on a vector (exact max/min/+ arithmetic)."""
    if isinstance(f, TropicalLinear):
        if len(x) != f.dim:
            raise DimensionMismatch(f"vector of dimension {len(x)} for matrix of size {f.dim}")
        out = []
        for row in f.matrix:
            best = None
            for a, v in zip(row, x):
                if is_bottom(a):
                    continue
                s = a + v
                if best is None or s > best:
                    best = s
            out.append(best)
        return tuple(out)
    if isinstance(f, CoordinateMap):
        if len(x) != f.input_dim:
            raise DimensionMismatch(f"vector of dimension {len(x)} for map on {f.input_dim}")
        return tuple(eval_expr(e, x) for e in f.coords)
    raise TypeError(f"not a map: {f!r}")


def identity_map(n: int) -> CoordinateMap:
    return CoordinateMap(tuple(Coord(i) for i in range(n)), n)


def constant_map(value: Vector, input_dim: int) -> CoordinateMap:
    return CoordinateMap(tuple(Const(v) for v in value), input_dim)


class ExprParseError(ValueError):
    """Raised on malformed coordinate-expression strings."""


_TOKEN = re.compile(
    r"\s*(?:(?P<name>max|min)\b|(?P<coord>x\d+)"
    r"|(?P<num>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?)"
    r"|(?P<punct>[(),+-]))"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ExprParseError(f"bad token at {text[pos:]!r}")
        pos = m.end()
        for kind in ("name", "coord", "num", "punct"):
            val = m.group(kind)
            if val is not None:
                tokens.append((kind, val))
                break
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, str]]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> tuple[str, str] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, kind: str | None = None, value: str | None = None) -> tuple[str, str]:
        tok = self.peek()
        if tok is None:
            raise ExprParseError("unexpected end of expression")
        if kind is not None and tok[0] != kind:
            raise ExprParseError(f"expected {kind}, got {tok[1]!r}")
        if value is not None and tok[1] != value:
            raise ExprParseError(f"expected {value!r}, got {tok[1]!r}")
        self.pos += 1
        return tok

    def parse_number(self) -> float:
        sign = 1.0
        tok = self.peek()
        if tok == ("punct", "-"):
            self.take()
            sign = -1.0
        elif tok == ("punct", "+"):
            self.take()
        num = self.take("num")[1]
        v = sign * float(num)
        if not math.isfinite(v):
            raise ExprParseError(f"literal {num!r} is not finite")
        return v

    def parse_expr(self) -> Expr:
        tok = self.peek()
        if tok is None:
            raise ExprParseError("empty expression")
        if tok[0] == "name":
            node = self.parse_call()
        elif tok[0] == "coord":
            self.take()
            node = Coord(int(tok[1][1:]))
        else:
            # Literal atom; "lit + expr" shifts the right side, while
            # "lit - expr" is rejected as non-monotone.
            value = self.parse_number()
            nxt = self.peek()
            if nxt == ("punct", "+") and self.tokens[self.pos + 1: self.pos + 2] and \
                    self.tokens[self.pos + 1][0] in ("name", "coord"):
                self.take()
                rhs = self.parse_expr_no_tail()
                node = Shift(rhs, value)
            else:
                node = Const(value)
        return self.parse_tail(node)

    def parse_expr_no_tail(self) -> Expr:
        tok = self.peek()
        if tok is None:
            raise ExprParseError("dangling '+'")
        if tok[0] == "name":
            return self.parse_call()
        if tok[0] == "coord":
            self.take()
            return Coord(int(tok[1][1:]))
        raise ExprParseError(f"expected coordinate or max/min after '+', got {tok[1]!r}")

    def parse_tail(self, node: Expr) -> Expr:
        while True:
            tok = self.peek()
            if tok == ("punct", "+"):
                self.take()
                node = Shift(node, self.parse_number_raw())
            elif tok == ("punct", "-"):
                self.take()
                node = Shift(node, -self.parse_number_raw())
            else:
                return node

    def parse_number_raw(self) -> float:
        tok = self.peek()
        if tok is None or tok[0] != "num":
            got = "end of input" if tok is None else repr(tok[1])
            raise ExprParseError(f"expected a literal offset, got {got}")
        self.take()
        return float(tok[1])

    def parse_call(self) -> Expr:
        name = self.take("name")[1]
        self.take("punct", "(")
        left = self.parse_expr()
        self.take("punct", ",")
        right = self.parse_expr()
        self.take("punct", ")")
        return Max(left, right) if name == "max" else Min(left, right)


def parse_coordinate_expr(text: str) -> Expr:
    """Parse one coordinate expression, e.g. ``"max(min(x0+1,x1),x2-2)"``."""
    parser = _Parser(_tokenize(text))
    node = parser.parse_expr()
    if parser.peek() is not None:
        raise ExprParseError(f"trailing input at {parser.peek()[1]!r}")
    return node


def parse_coordinate_map(texts: list[str], input_dim: int) -> CoordinateMap:
    return CoordinateMap(tuple(parse_coordinate_expr(t) for t in texts), input_dim)
