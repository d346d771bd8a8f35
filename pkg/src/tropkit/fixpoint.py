"""Fixed-point search on tropical polytopes, with certificates.

The solver iterates ``x <- retract(P, f(x))`` from the supplied start and
from every generator, detects orbit revisits on a coarse grid, and when a
cycle shows up retries once from the supremum of the cycle points (for a
monotone map that supremum is at or below an actual fixed point, so the
retry often lands exactly).  A report never claims more than its
certificate: ``Converged`` always carries a residual at or below the
tolerance, and the maximum distance moved by the retraction is reported
so that maps that genuinely preserve the polytope show displacement 0.

The functional-reduction variant searches inside the image polytope under
finitely many functionals, pulls the answer back with the sublevel
projection, and certifies the per-functional residuals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence, Union

from .convex import DEFAULT_TOL, TropicalPolytope, membership, retract
from .errors import DimensionMismatch, EmptySublevel, NotAMember
from .maps import CoordinateMap, MapExpr, TropicalLinear, eval_map
from .space import (
    Functional,
    Vector,
    apply_functional,
    as_functional,
    check_same_dim,
    scalar_mul,
    uniform_distance,
    vec_oplus,
)

CONVERGED = "Converged"
CYCLE_DETECTED = "CycleDetected"
MAX_ITERATIONS = "MaxIterations"

DEFAULT_MAX_ITER = 10000

#: Grid used to coarsen iterates for orbit-revisit detection.
_CYCLE_GRID = 1e-12

SelfMap = Union[MapExpr, Callable[[Vector], Vector]]


@dataclass(frozen=True)
class FixpointReport:
    """Certificate for a fixed-point search.

    ``residual`` is the uniform distance between the returned point and
    its image; ``retraction_displacement`` is the largest distance the
    per-step retraction had to move an iterate back into the polytope.
    """

    point: Vector
    residual: float
    iterations: int
    status: str
    retraction_displacement: float = 0.0


def _as_callable(f: SelfMap, dim: int) -> Callable[[Vector], Vector]:
    if isinstance(f, (CoordinateMap, TropicalLinear)):
        def apply(x: Vector) -> Vector:
            y = eval_map(f, x)
            if len(y) != dim:
                raise DimensionMismatch(f"map returns dimension {len(y)}, expected {dim}")
            return y
        return apply
    if callable(f):
        return f
    raise TypeError(f"not a map: {f!r}")


def _coarse_key(x: Vector) -> tuple[int, ...]:
    return tuple(round(v / _CYCLE_GRID) for v in x)


def _run_from(apply_f: Callable[[Vector], Vector], p: TropicalPolytope,
              start: Vector, tol: float, max_iter: int) -> FixpointReport:
    x = start
    seen = {_coarse_key(x): 0}
    history = [x]
    best_res = uniform_distance(apply_f(x), x)
    best_point = x
    displacement = 0.0
    polished = False
    iterations = 0
    ended = None
    while iterations < max_iter:
        y = apply_f(x)
        res = uniform_distance(y, x)
        if res < best_res:
            best_res, best_point = res, x
        z = retract(p, y)
        moved = uniform_distance(y, z)
        if moved > displacement:
            displacement = moved
        iterations += 1
        if uniform_distance(z, x) <= tol:
            res_z = uniform_distance(apply_f(z), z)
            if res_z < best_res:
                best_res, best_point = res_z, z
            if res_z <= tol:
                return FixpointReport(z, res_z, iterations, CONVERGED, displacement)
            # Stationary for the retracted map but not for f itself: the
            # orbit now revisits z forever, so retry once from the sup of
            # z with its retracted image before giving up.
            if polished:
                ended = CYCLE_DETECTED
                break
            polished = True
            x = vec_oplus(z, retract(p, apply_f(z)))
            if _coarse_key(x) in seen:
                ended = CYCLE_DETECTED
                break
        else:
            key = _coarse_key(z)
            if key in seen:
                if polished:
                    ended = CYCLE_DETECTED
                    break
                # Retry from the sup of the cycle: for a monotone map this
                # is a sub-fixed point, often an exact fixed point.
                polished = True
                acc = z
                for point in history[seen[key]:]:
                    acc = vec_oplus(acc, point)
                if _coarse_key(acc) in seen:
                    ended = CYCLE_DETECTED
                    break
                x = acc
            else:
                x = z
        key = _coarse_key(x)
        if key not in seen:
            seen[key] = len(history)
            history.append(x)
    if ended is None:
        ended = MAX_ITERATIONS
    status = CONVERGED if best_res <= tol else ended
    return FixpointReport(best_point, best_res, iterations, status, displacement)


def find_fixpoint(f: SelfMap, p: TropicalPolytope, x0: Vector,
                  tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> FixpointReport:
    """Search for a fixed point of ``f`` inside the polytope.

    Runs the retracted iteration from ``x0`` and from every generator and
    keeps the best certificate (smallest residual, earliest start on
    ties).  Statuses: ``Converged`` (residual <= tol), ``CycleDetected``
    (the orbit revisited a point), ``MaxIterations``.
    """
    p.check_point(x0)
    if not membership(p, x0, tol):
        raise NotAMember(f"start {x0!r} is not in the polytope (tol={tol})")
    apply_f = _as_callable(f, p.dim)
    best: FixpointReport | None = None
    for start in [tuple(x0)] + list(p.generators):
        report = _run_from(apply_f, p, start, tol, max_iter)
        if best is None or report.residual < best.residual:
            best = report
        if best.residual == 0.0:
            break
    return best


def functional_image(functionals: Sequence[Functional], x: Vector) -> Vector:
    """Evaluate every functional on ``x``; the coordinate functionals give
    back ``x`` itself."""
    if not functionals:
        raise ValueError("need at least one functional")
    return tuple(apply_functional(w, x) for w in functionals)


def image_polytope(p: TropicalPolytope, functionals: Sequence[Functional]) -> TropicalPolytope:
    """Image of the hull under the functional evaluation map; linearity
    makes the generator images generate it."""
    ws = [as_functional(w) for w in functionals]
    for w in ws:
        check_same_dim(w, p.generators[0])
    return TropicalPolytope(tuple(functional_image(ws, g) for g in p.generators))


def sublevel_point(p: TropicalPolytope, functionals: Sequence[Functional],
                   values: Vector, tol: float = DEFAULT_TOL) -> Vector:
    """Greatest hull point whose functional values stay below ``values``.

    Coefficients are ``min(0, min_w(values_w - w(g_j)))``; the raw
    combination is returned without renormalizing, so its top coefficient
    is 0 up to ``tol``.  When every coefficient falls below ``-tol`` there
    is no hull point under ``values`` and EmptySublevel is raised.
    """
    ws = [as_functional(w) for w in functionals]
    if not ws:
        raise ValueError("need at least one functional")
    if len(values) != len(ws):
        raise DimensionMismatch(f"{len(values)} values for {len(ws)} functionals")
    mus = []
    for g in p.generators:
        mu = 0.0
        for w, v in zip(ws, values):
            gap = v - apply_functional(w, g)
            if gap < mu:
                mu = gap
        mus.append(mu)
    if max(mus) < -tol:
        raise EmptySublevel(
            f"no hull point lies below {values!r} (best coefficient {max(mus)})"
        )
    acc = None
    for mu, g in zip(mus, p.generators):
        shifted = scalar_mul(mu, g)
        acc = shifted if acc is None else vec_oplus(acc, shifted)
    return acc


def functional_fixpoint(f: SelfMap, p: TropicalPolytope, functionals: Sequence[Functional],
                        tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER,
                        x0: Vector | None = None) -> tuple[FixpointReport, tuple[float, ...]]:
    """Find a hull point whose functional values the map leaves fixed.

    Searches in the image polytope of the given functionals, pulls the
    fixed image back through the sublevel projection, and reports one
    residual per functional; the report's residual is their maximum.
    """
    ws = [as_functional(w) for w in functionals]
    if not ws:
        raise ValueError("need at least one functional")
    for w in ws:
        check_same_dim(w, p.generators[0])
    apply_f = _as_callable(f, p.dim)
    u_poly = image_polytope(p, ws)

    def g(u: Vector) -> Vector:
        return functional_image(ws, apply_f(sublevel_point(p, ws, u, tol)))

    if x0 is not None:
        p.check_point(x0)
        if not membership(p, x0, tol):
            raise NotAMember(f"start {x0!r} is not in the polytope (tol={tol})")
        u0 = functional_image(ws, x0)
    else:
        u0 = u_poly.generators[0]
    image_report = find_fixpoint(g, u_poly, u0, tol, max_iter)
    x = sublevel_point(p, ws, image_report.point, tol)
    fx = apply_f(x)
    residuals = tuple(abs(apply_functional(w, x) - apply_functional(w, fx)) for w in ws)
    worst = max(residuals)
    if worst <= tol:
        status = CONVERGED
    elif image_report.status == CONVERGED:
        status = MAX_ITERATIONS
    else:
        status = image_report.status
    report = FixpointReport(x, worst, image_report.iterations, status,
                            image_report.retraction_displacement)
    return report, residuals
