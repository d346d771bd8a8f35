import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tropkit import BOTTOM, BottomNotInvertible, inv, is_bottom, leq, oplus, otimes
from tropkit.semiring import UNIT, as_scalar, scalar_from_json, scalar_to_json

dyadics = st.integers(-320, 320).map(lambda k: k / 64.0)
scalars = st.one_of(st.just(BOTTOM), dyadics)


def eq(a, b):
    if is_bottom(a) or is_bottom(b):
        return is_bottom(a) and is_bottom(b)
    return a == b


def test_oplus_examples():
    assert oplus(3.0, 5.0) == 5.0
    assert oplus(BOTTOM, 7.0) == 7.0
    assert oplus(7.0, BOTTOM) == 7.0
    assert is_bottom(oplus(BOTTOM, BOTTOM))


def test_otimes_examples():
    assert otimes(3.0, 5.0) == 8.0
    assert otimes(UNIT, 11.5) == 11.5
    assert is_bottom(otimes(BOTTOM, 5.0))
    assert is_bottom(otimes(5.0, BOTTOM))
    assert is_bottom(otimes(BOTTOM, BOTTOM))


def test_inv_examples():
    assert inv(4.0) == -4.0
    assert inv(0.0) == 0.0
    assert otimes(4.0, inv(4.0)) == UNIT
    with pytest.raises(BottomNotInvertible):
        inv(BOTTOM)


@given(scalars)
def test_idempotent(a):
    assert eq(oplus(a, a), a)


@given(scalars, scalars)
def test_commutative(a, b):
    assert eq(oplus(a, b), oplus(b, a))
    assert eq(otimes(a, b), otimes(b, a))


@given(scalars, scalars, scalars)
def test_associative(a, b, c):
    assert eq(oplus(oplus(a, b), c), oplus(a, oplus(b, c)))
    assert eq(otimes(otimes(a, b), c), otimes(a, otimes(b, c)))


@given(scalars, scalars, scalars)
def test_distributive(a, b, c):
    assert eq(otimes(a, oplus(b, c)), oplus(otimes(a, b), otimes(a, c)))
    assert eq(otimes(oplus(a, b), c), oplus(otimes(a, c), otimes(b, c)))


@given(scalars)
def test_neutral_elements(a):
    assert eq(oplus(BOTTOM, a), a)
    assert eq(otimes(UNIT, a), a)
    assert is_bottom(otimes(BOTTOM, a))


@given(scalars, scalars)
def test_order_is_oplus_absorption(a, b):
    assert leq(a, b) == eq(oplus(a, b), b)


@given(scalars, scalars, scalars)
def test_order_compatible_with_otimes(a, b, c):
    if leq(a, b):
        assert leq(otimes(a, c), otimes(b, c))


@given(scalars)
def test_json_roundtrip(a):
    assert eq(scalar_from_json(scalar_to_json(a)), a)


def test_json_bottom_is_null():
    assert scalar_to_json(BOTTOM) is None
    assert is_bottom(scalar_from_json(None))


def test_as_scalar_rejects_junk():
    with pytest.raises(ValueError):
        as_scalar(math.inf)
    with pytest.raises(ValueError):
        as_scalar(math.nan)
    with pytest.raises(TypeError):
        as_scalar(True)
    with pytest.raises(TypeError):
        as_scalar("3")
