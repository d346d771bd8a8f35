import random

import pytest

from tropkit import (
    BOTTOM,
    Const,
    Coord,
    CoordinateMap,
    DimensionMismatch,
    ExprParseError,
    Max,
    Min,
    Shift,
    TropicalLinear,
    constant_map,
    eval_map,
    identity_map,
    parse_coordinate_expr,
    parse_coordinate_map,
    scalar_mul,
    uniform_distance,
)

from _gen import dyadic_vector, random_map

WORKED = TropicalLinear(((2.0, 5.0), (1.0, 3.0)))


def test_tropical_linear_eval():
    assert eval_map(WORKED, (2.0, 0.0)) == (5.0, 3.0)
    assert eval_map(TropicalLinear(((BOTTOM, 1.0), (1.0, BOTTOM))), (0.0, 0.0)) == (1.0, 1.0)
    with pytest.raises(DimensionMismatch):
        eval_map(WORKED, (1.0, 2.0, 3.0))


def test_identity_and_constant_maps():
    assert eval_map(identity_map(3), (1.0, 2.0, 3.0)) == (1.0, 2.0, 3.0)
    assert eval_map(constant_map((4.0, -1.0), 2), (0.0, 100.0)) == (4.0, -1.0)


def test_coordinate_expression_eval():
    f = CoordinateMap((Min(Shift(Coord(0), 1.0), Coord(1)), Coord(1)), 2)
    assert eval_map(f, (0.0, 5.0)) == (1.0, 5.0)
    assert eval_map(f, (10.0, 5.0)) == (5.0, 5.0)


def test_tropical_linear_validation():
    with pytest.raises(ValueError):
        TropicalLinear(((BOTTOM, BOTTOM), (0.0, 0.0)))
    with pytest.raises(DimensionMismatch):
        TropicalLinear(((0.0, 1.0),))
    with pytest.raises(ValueError):
        TropicalLinear(())


def test_coordinate_map_validation():
    with pytest.raises(DimensionMismatch):
        CoordinateMap((Coord(2),), 2)
    with pytest.raises(ValueError):
        CoordinateMap((), 2)


def test_parser_accepts_grammar():
    e = parse_coordinate_expr("max(min(x0+1,x1),x2-2)")
    x = (0.0, 5.0, 3.0)
    assert eval_map(CoordinateMap((e,), 3), x) == (max(min(1.0, 5.0), 1.0),)
    assert parse_coordinate_expr("x3") == Coord(3)
    assert parse_coordinate_expr("-2.5") == Const(-2.5)
    assert parse_coordinate_expr("1+x0") == Shift(Coord(0), 1.0)
    assert parse_coordinate_expr("x0 + 1 - 0.5") == Shift(Shift(Coord(0), 1.0), -0.5)
    assert parse_coordinate_expr("min( x0 , max(x1-1e1, 2) )") == Min(
        Coord(0), Max(Shift(Coord(1), -10.0), Const(2.0))
    )


@pytest.mark.parametrize("bad", [
    "",
    "1-x0",          # literal minus expression is not monotone
    "x0+x1",         # only literal offsets
    "x0*2",
    "max(x0)",
    "max(x0,x1,x2)",
    "max(x0,x1",
    "x0)",
    "foo(x0,x1)",
    "x0 x1",
])
def test_parser_rejects_junk(bad):
    with pytest.raises(ExprParseError):
        parse_coordinate_expr(bad)


def test_parse_coordinate_map_checks_indices():
    with pytest.raises(DimensionMismatch):
        parse_coordinate_map(["x0", "x5"], 2)


def test_random_maps_monotone_and_nonexpansive():
    rnd = random.Random(13)
    for _ in range(300):
        n = rnd.randint(1, 4)
        f = random_map(rnd, n)
        x = dyadic_vector(rnd, n)
        y = dyadic_vector(rnd, n)
        fx, fy = eval_map(f, x), eval_map(f, y)
        assert uniform_distance(fx, fy) <= uniform_distance(x, y)
        up = tuple(max(a, b) for a, b in zip(x, y))
        f_up = eval_map(f, up)
        assert all(a <= b for a, b in zip(fx, f_up))
        r = rnd.randint(0, 192) / 64.0
        scaled = eval_map(f, scalar_mul(r, x))
        assert all(a <= r + b for a, b in zip(scaled, fx))
