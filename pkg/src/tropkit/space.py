"""Finite-dimensional max-plus vectors, functionals, and the uniform metric.

Vectors are fixed-length tuples of finite reals ordered pointwise.  The
uniform distance is the sup norm of the difference; it equals the least
``r >= 0`` such that each vector, shifted up by ``r``, dominates the
other.  A bounded variant wraps it in ``arctan``.

Functionals are max-plus linear maps to scalars, given by a coefficient
tuple that may contain BOTTOM entries (coordinate projections) but needs
at least one finite entry so values stay finite.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .errors import (
    BottomScaling,
    CoefficientsNotNormalized,
    DimensionMismatch,
    EmptyCombination,
    RadiusNotAboveUnit,
)
from .semiring import BOTTOM, Scalar, as_scalar, is_bottom

Vector = tuple[float, ...]
Functional = tuple[Scalar, ...]


def as_vector(entries: Iterable[object]) -> Vector:
    """Coerce to a vector: nonempty tuple of finite reals."""
    out = []
    for e in entries:
        if isinstance(e, bool) or not isinstance(e, (int, float)):
            raise TypeError(f"vector entry must be a number, got {e!r}")
        v = float(e)
        if not math.isfinite(v):
            raise ValueError(f"vector entries must be finite, got {v!r}")
        out.append(v)
    if not out:
        raise ValueError("vector must have at least one entry")
    return tuple(out)


def as_functional(coeffs: Iterable[object]) -> Functional:
    """Coerce to a functional: scalars with at least one finite entry."""
    out = tuple(as_scalar(c) for c in coeffs)
    if not out:
        raise ValueError("functional must have at least one coefficient")
    if all(is_bottom(c) for c in out):
        raise ValueError("functional needs at least one finite coefficient")
    return out


def check_same_dim(x: Sequence, y: Sequence) -> None:
    if len(x) != len(y):
        raise DimensionMismatch(f"dimension {len(x)} vs {len(y)}")


def vec_oplus(x: Vector, y: Vector) -> Vector:
    """Pointwise max."""
    check_same_dim(x, y)
    return tuple(a if a >= b else b for a, b in zip(x, y))


def scalar_mul(r: Scalar, x: Vector) -> Vector:
    """Shift every entry by ``r``; bottom scaling would leave the space."""
    if is_bottom(r):
        raise BottomScaling("cannot scale a vector by bottom")
    return tuple(r + a for a in x)


def uniform_distance(x: Vector, y: Vector) -> float:
    """Sup-norm distance: max_i |x_i - y_i|."""
    check_same_dim(x, y)
    return max(abs(a - b) for a, b in zip(x, y))


def arctan_distance(x: Vector, y: Vector) -> float:
    """Bounded metric arctan(uniform_distance); values in [0, pi/2)."""
    return math.atan(uniform_distance(x, y))


def strictly_dominates(x: Vector, y: Vector) -> bool:
    """True iff x exceeds y by a strictly positive margin in every entry."""
    check_same_dim(x, y)
    return min(a - b for a, b in zip(x, y)) > 0.0


def in_ball(center: Vector, radius: float, y: Vector) -> bool:
    """Open uniform ball via the two strict domination conditions.

    Equivalent, in finite dimension, to uniform_distance(center, y) < radius.
    """
    if is_bottom(radius) or radius <= 0.0:
        raise RadiusNotAboveUnit(f"radius must be > 0, got {radius!r}")
    check_same_dim(center, y)
    up = scalar_mul(radius, center)
    return strictly_dominates(up, y) and strictly_dominates(scalar_mul(radius, y), center)


def convex_combination(coeffs: Sequence[Scalar], points: Sequence[Vector]) -> Vector:
    """Max of shifted points, with the max coefficient required to be 0.

    Bottom coefficients drop their point from the combination; at least one
    coefficient must be finite, and the largest finite one must equal 0
    exactly (no tolerance at this level).
    """
    if len(coeffs) != len(points):
        raise DimensionMismatch(
            f"{len(coeffs)} coefficients for {len(points)} points"
        )
    finite = [(c, p) for c, p in zip(coeffs, points) if not is_bottom(c)]
    if not finite:
        raise EmptyCombination("no finite coefficients")
    top = max(c for c, _ in finite)
    if top != 0.0:
        raise CoefficientsNotNormalized(f"max coefficient is {top!r}, not 0")
    acc = None
    for c, p in finite:
        shifted = scalar_mul(c, p)
        acc = shifted if acc is None else vec_oplus(acc, shifted)
    return acc


def apply_functional(w: Functional, x: Vector) -> float:
    """Evaluate max_i (w_i + x_i) over the finite coefficients."""
    check_same_dim(w, x)
    best = None
    for c, a in zip(w, x):
        if is_bottom(c):
            continue
        v = c + a
        if best is None or v > best:
            best = v
    if best is None:
        raise ValueError("functional has no finite coefficient")
    return best


def coordinate_functionals(n: int) -> list[Functional]:
    """The n projections x -> x_i as functionals."""
    out = []
    for i in range(n):
        coeffs: list[Scalar] = [BOTTOM] * n
        coeffs[i] = 0.0
        out.append(tuple(coeffs))
    return out
