"""Tropical polytopes: hulls of finitely many generators, with the
order-theoretic retraction onto them.

A polytope is the set of combinations ``max_j (lam_j + g_j)`` over
coefficient vectors with ``max_j lam_j = 0`` (bottom coefficients drop
their generator).  Membership and retraction both come from residuation:
``min(0, min_i(y_i - g_i))`` is the largest admissible coefficient of a
generator below ``y``, and suprema over the whole hull collapse to
suprema over the generators.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, NotAMember
from .space import Vector, as_vector, check_same_dim, scalar_mul, uniform_distance, vec_oplus

#: Default sup-norm tolerance for membership-style checks.
DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class TropicalPolytope:
    """Immutable hull of ``k >= 1`` generator vectors of common dimension."""

    generators: tuple[Vector, ...]

    def __post_init__(self) -> None:
        gens = tuple(as_vector(g) for g in self.generators)
        if not gens:
            raise ValueError("a polytope needs at least one generator")
        n = len(gens[0])
        for g in gens:
            if len(g) != n:
                raise DimensionMismatch("generators of mixed dimension")
        object.__setattr__(self, "generators", gens)

    @property
    def dim(self) -> int:
        return len(self.generators[0])

    def check_point(self, y: Vector) -> None:
        if len(y) != self.dim:
            raise DimensionMismatch(f"point has dimension {len(y)}, polytope {self.dim}")


def residual(g: Vector, y: Vector) -> float:
    """Greatest shift ``lam`` with ``lam + g <= y`` pointwise: min_i(y_i - g_i)."""
    check_same_dim(g, y)
    return min(b - a for a, b in zip(g, y))


def clamped_residual(g: Vector, y: Vector) -> float:
    """The residual capped at 0, i.e. the largest admissible hull coefficient."""
    r = residual(g, y)
    return r if r < 0.0 else 0.0


def _reconstruction(p: TropicalPolytope, y: Vector) -> tuple[list[float], Vector]:
    """Clamped residuals of all generators and the combination they produce."""
    mus = [clamped_residual(g, y) for g in p.generators]
    acc = None
    for mu, g in zip(mus, p.generators):
        shifted = scalar_mul(mu, g)
        acc = shifted if acc is None else vec_oplus(acc, shifted)
    return mus, acc


def membership(p: TropicalPolytope, y: Vector, tol: float = DEFAULT_TOL) -> bool:
    """Residuation test: ``y`` is in the hull iff the greatest combination
    below it reproduces it and carries a maximal coefficient of 0 (a point
    reachable only with all coefficients < 0 lies in the scaled-down span,
    not the hull)."""
    p.check_point(y)
    mus, z = _reconstruction(p, y)
    return uniform_distance(z, y) <= tol and max(mus) >= -tol


def sup_subset(p: TropicalPolytope, members: list[Vector], tol: float = DEFAULT_TOL) -> Vector:
    """Pointwise max of hull members; stays in the hull by compactness."""
    if not members:
        raise ValueError("sup of an empty family")
    for y in members:
        if not membership(p, y, tol):
            raise NotAMember(f"{y!r} is not in the polytope (tol={tol})")
    acc = members[0]
    for y in members[1:]:
        acc = vec_oplus(acc, y)
    return acc


def retract(p: TropicalPolytope, y: Vector) -> Vector:
    """Project ``y`` onto the hull.

    Takes the best admissible coefficient ``mu_j`` of every generator, the
    supremum ``m`` of those, and the combination ``q = max_j (mu_j + g_j)``;
    the retraction is ``q - m``.  It fixes hull members, lands in the hull,
    and ``m + retract(y) <= y`` pointwise.
    """
    p.check_point(y)
    mus, q = _reconstruction(p, y)
    m = max(mus)
    return scalar_mul(-m, q)


def reduce_generators(p: TropicalPolytope, tol: float = DEFAULT_TOL) -> TropicalPolytope:
    """Drop generators expressible from the remaining ones.

    Scans in index order; never invoked implicitly, so constructed
    polytopes round-trip their generator lists bit-exactly.
    """
    kept = list(p.generators)
    i = 0
    while i < len(kept) and len(kept) > 1:
        rest = kept[:i] + kept[i + 1:]
        if membership(TropicalPolytope(tuple(rest)), kept[i], tol):
            kept.pop(i)
        else:
            i += 1
    return TropicalPolytope(tuple(kept))
