"""Max-plus scalar arithmetic.

Scalars are finite reals together with a distinguished bottom element.
Addition is ``max`` (idempotent, bottom neutral), multiplication is
ordinary ``+`` (bottom absorbing), and the unit is ``0.0``.  Bottom is a
singleton marker rather than an IEEE ``-inf`` so that arithmetic on it is
unambiguous and serialization is lossless; numeric code may map it to and
from ``-inf`` at its own boundary.
"""

from __future__ import annotations

import math
from typing import Union

from .errors import BottomNotInvertible


class _BottomType:
    """Singleton marker for the semiring zero."""

    __slots__ = ()
    _instance = None

    def __new__(cls) -> "_BottomType":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "BOTTOM"


BOTTOM = _BottomType()

#: Multiplicative unit (the additive shift by zero).
UNIT = 0.0

Scalar = Union[float, _BottomType]


def is_bottom(a: Scalar) -> bool:
    return isinstance(a, _BottomType)


def as_scalar(value: object) -> Scalar:
    """Coerce ``value`` to a Scalar; finite number or BOTTOM/None only."""
    if value is None or isinstance(value, _BottomType):
        return BOTTOM
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise TypeError(f"not a scalar: {value!r}")
    v = float(value)
    if not math.isfinite(v):
        raise ValueError(f"scalar must be finite, got {v!r}")
    return v


def oplus(a: Scalar, b: Scalar) -> Scalar:
    """Idempotent addition: max, with bottom as the neutral element."""
    if is_bottom(a):
        return b
    if is_bottom(b):
        return a
    return a if a >= b else b


def otimes(a: Scalar, b: Scalar) -> Scalar:
    """Multiplication: ordinary addition, with bottom absorbing."""
    if is_bottom(a) or is_bottom(b):
        return BOTTOM
    return a + b


def inv(a: Scalar) -> float:
    """Multiplicative inverse (negation). Bottom is not invertible."""
    if is_bottom(a):
        raise BottomNotInvertible("bottom has no inverse")
    return -a


def leq(a: Scalar, b: Scalar) -> bool:
    """Standard order: a <= b iff oplus(a, b) == b."""
    if is_bottom(a):
        return True
    if is_bottom(b):
        return False
    return a <= b


def scalar_to_json(a: Scalar) -> object:
    """JSON image: a number, or null for bottom."""
    return None if is_bottom(a) else a


def scalar_from_json(value: object) -> Scalar:
    return as_scalar(value)
