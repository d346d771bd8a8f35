"""Command-line front end.

Structured JSON goes to stdout, one object per invocation; anything
human-readable stays on stderr.  Exit codes: 0 on success, 1 on domain
errors (reported as {"error": code, "detail": ...}), 2 on parse or schema
problems.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import oracles
from .convex import membership, retract
from .eigen import eigenpair
from .errors import TropicalError
from .fixpoint import find_fixpoint, functional_fixpoint, sublevel_point
from .jsonio import (
    SchemaError,
    canonical_dumps,
    load_json_file,
    parse_functionals,
    parse_map,
    parse_matrix,
    parse_polytope,
    parse_vector,
    scalars_to_json,
)
from .space import arctan_distance, uniform_distance


def _point_arg(args, context: str = "--point"):
    if args.point is None:
        raise SchemaError(f"{context} is required for this command")
    try:
        obj = json.loads(args.point)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{context}: not valid JSON: {exc}") from exc
    return parse_vector(obj, context)


def _cmd_distance(args) -> dict:
    obj = load_json_file(args.input)
    x = parse_vector(obj.get("x"), "x")
    y = parse_vector(obj.get("y"), "y")
    return {"uniform": uniform_distance(x, y), "arctan": arctan_distance(x, y)}


def _cmd_member(args) -> dict:
    poly = parse_polytope(load_json_file(args.input))
    y = _point_arg(args)
    return {"member": membership(poly, y, args.tol)}


def _cmd_retract(args) -> dict:
    poly = parse_polytope(load_json_file(args.input))
    y = _point_arg(args)
    return {"result": list(retract(poly, y))}


def _cmd_project(args) -> dict:
    obj = load_json_file(args.input)
    poly = parse_polytope(obj)
    funcs = parse_functionals(obj.get("functionals"), poly.dim)
    if args.point is not None:
        values = _point_arg(args)
    else:
        values = parse_vector(obj.get("values"), "values")
    if len(values) != len(funcs):
        raise SchemaError(f"{len(values)} values for {len(funcs)} functionals")
    result = sublevel_point(poly, funcs, values, args.tol)
    return {"result": list(result)}


def _load_fixpoint_problem(args):
    obj = load_json_file(args.input)
    poly = parse_polytope(obj)
    fmap = parse_map(obj.get("map") if "map" in obj else _missing(obj, "map"), poly.dim)
    if "x0" in obj:
        x0 = parse_vector(obj["x0"], "x0")
        if len(x0) != poly.dim:
            raise SchemaError(f"x0 has {len(x0)} entries, dim is {poly.dim}")
    else:
        x0 = poly.generators[0]
    return obj, poly, fmap, x0


def _missing(obj, key):
    raise SchemaError(f"problem: missing key {key!r}")


def _cmd_fixpoint(args) -> dict:
    _, poly, fmap, x0 = _load_fixpoint_problem(args)
    report = find_fixpoint(fmap, poly, x0, args.tol, args.max_iter)
    return {
        "result": list(report.point),
        "residual": report.residual,
        "iterations": report.iterations,
        "status": report.status,
        "retraction_displacement": report.retraction_displacement,
    }


def _cmd_fixvalues(args) -> dict:
    obj, poly, fmap, x0 = _load_fixpoint_problem(args)
    funcs = parse_functionals(obj.get("functionals"), poly.dim)
    report, residuals = functional_fixpoint(fmap, poly, funcs, args.tol, args.max_iter, x0=x0)
    return {
        "result": list(report.point),
        "residual": report.residual,
        "iterations": report.iterations,
        "status": report.status,
        "retraction_displacement": report.retraction_displacement,
        "functional_residuals": list(residuals),
    }


def _cmd_eigen(args) -> dict:
    obj = load_json_file(args.input)
    matrix = parse_matrix(obj.get("matrix") if "matrix" in obj else _missing(obj, "matrix"))
    lam, vec = eigenpair(matrix)
    return {"lambda": lam, "v": scalars_to_json(vec)}


def _cmd_oracle(args) -> dict:
    obj = load_json_file(args.input)
    kind = args.kind
    if kind == "eigen":
        matrix = parse_matrix(obj.get("matrix") if "matrix" in obj else _missing(obj, "matrix"))
        lam_enum = oracles.max_mean_by_enumeration(matrix)
        lam, _ = eigenpair(matrix)
        return {
            "oracle": {"lambda": lam_enum},
            "closed_form": {"lambda": lam},
            "discrepancy": abs(lam - lam_enum),
        }
    poly = parse_polytope(obj)
    if kind == "member":
        y = _point_arg(args)
        is_member, gap = oracles.grid_membership(poly, y, args.grid)
        closed = membership(poly, y, args.tol)
        return {
            "oracle": {"member": is_member, "gap": gap},
            "closed_form": {"member": closed},
            "discrepancy": 0.0 if is_member == closed else 1.0,
        }
    if kind == "retract":
        y = _point_arg(args)
        approx = oracles.grid_retract(poly, y, args.grid)
        closed = retract(poly, y)
        return {
            "oracle": {"result": list(approx)},
            "closed_form": {"result": list(closed)},
            "discrepancy": uniform_distance(approx, closed),
        }
    if kind == "sublevel":
        funcs = parse_functionals(obj.get("functionals"), poly.dim)
        values = _point_arg(args) if args.point is not None else parse_vector(obj.get("values"), "values")
        margin = oracles.grid_sublevel_margin(poly, funcs, values, args.grid)
        try:
            sublevel_point(poly, funcs, values, args.tol)
            feasible = True
        except TropicalError:
            feasible = False
        oracle_feasible = margin >= 0.0
        return {
            "oracle": {"feasible": oracle_feasible, "margin": margin},
            "closed_form": {"feasible": feasible},
            "discrepancy": 0.0 if feasible == oracle_feasible else 1.0,
        }
    if kind == "fixpoint":
        fmap = parse_map(obj.get("map") if "map" in obj else _missing(obj, "map"), poly.dim)
        point, best = oracles.grid_min_residual(poly, fmap, args.grid)
        x0 = parse_vector(obj["x0"], "x0") if "x0" in obj else poly.generators[0]
        report = find_fixpoint(fmap, poly, x0, args.tol, args.max_iter)
        return {
            "oracle": {"result": list(point), "residual": best},
            "closed_form": {"result": list(report.point), "residual": report.residual,
                            "status": report.status},
            "discrepancy": report.residual - best,
        }
    raise SchemaError(f"unknown oracle kind {kind!r}")


_COMMANDS = {
    "distance": _cmd_distance,
    "member": _cmd_member,
    "retract": _cmd_retract,
    "project": _cmd_project,
    "fixpoint": _cmd_fixpoint,
    "fixvalues": _cmd_fixvalues,
    "eigen": _cmd_eigen,
    "oracle": _cmd_oracle,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropkit",
        description="Max-plus polytopes, retraction, fixed points, eigenproblem.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, oracle: bool = False) -> argparse.ArgumentParser:
        cmd = sub.add_parser(name, help=help_text)
        if oracle:
            cmd.add_argument("kind", choices=["member", "retract", "sublevel", "fixpoint", "eigen"],
                             help="which brute-force oracle to run")
        cmd.add_argument("input", help="path to the input JSON file")
        cmd.add_argument("--tol", type=float, default=1e-9, help="sup-norm tolerance")
        cmd.add_argument("--max-iter", type=int, default=10000, help="iteration budget")
        cmd.add_argument("--seed", type=int, default=0,
                         help="reserved for randomized strategies; current solvers are deterministic")
        cmd.add_argument("--grid", type=float, default=0.01, help="oracle grid pitch")
        cmd.add_argument("--point", type=str, default=None, help="inline JSON vector")
        return cmd

    add("distance", "uniform and arctan distance between two vectors")
    add("member", "hull membership of --point")
    add("retract", "retraction of --point onto the hull")
    add("project", "greatest hull point below given functional values")
    add("fixpoint", "fixed-point search for the problem map")
    add("fixvalues", "point whose selected functional values the map fixes")
    add("eigen", "max-plus eigenvalue and eigenvector of a matrix")
    add("oracle", "brute-force cross-check of an operation", oracle=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = _COMMANDS[args.command](args)
    except SchemaError as exc:
        sys.stdout.write(canonical_dumps({"error": "ParseError", "detail": str(exc)}) + "\n")
        return 2
    except TropicalError as exc:
        sys.stdout.write(canonical_dumps({"error": exc.code, "detail": str(exc)}) + "\n")
        return 1
    sys.stdout.write(canonical_dumps(result) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
