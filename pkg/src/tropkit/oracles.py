"""Brute-force oracles used by the acceptance suite and the CLI.

These deliberately avoid the closed forms they cross-check.  Hull-side
oracles search the coefficient space of the generators directly: every
candidate is a coefficient vector with maximum 0 (bottom represented by a
value low enough to be absorbed), evaluated in vectorized batches over a
multiscale grid that starts coarse and refines around the best rows of
each objective.  All objectives are elementwise max/min/+ of coordinates,
hence 2-Lipschitz in the coefficients, so the refinement cannot lose the
optimum by more than the current spacing; the one-hot rows present at
level 0 keep generator candidates exact.

The eigen oracle enumerates every simple cycle instead.
"""

from __future__ import annotations

from typing import Callable, Sequence

import numpy as np

from .convex import TropicalPolytope
from .errors import NoCycle, ProblemTooLarge
from .maps import TropicalLinear
from .semiring import is_bottom
from .space import Functional, Vector

#: Hard cap on candidates evaluated by one oracle call.
GRID_POINT_GUARD = 10**7

_NEG = float("-inf")


def _guard(p: TropicalPolytope, pitch: float) -> None:
    if p.dim > 4:
        raise ProblemTooLarge(f"oracle supports dimension <= 4, got {p.dim}")
    if pitch <= 0:
        raise ValueError("pitch must be positive")


def _combine(lam: np.ndarray, gens: np.ndarray) -> np.ndarray:
    """Hull points for a batch of coefficient rows: max_j (lam_j + g_j)."""
    return (lam[:, :, None] + gens[None, :, :]).max(axis=1)


def _level0(k: int, radius: float, bot: float, values_per_coord: int) -> np.ndarray:
    """All coefficient rows with one coordinate pinned at 0 and the rest on
    a coarse grid including the bottom stand-in."""
    vals = np.concatenate([[bot], np.linspace(-radius, 0.0, values_per_coord)])
    rows = []
    for pinned in range(k):
        free = [vals] * (k - 1)
        if free:
            mesh = np.stack(np.meshgrid(*free, indexing="ij"), axis=-1).reshape(-1, k - 1)
        else:
            mesh = np.zeros((1, 0))
        block = np.insert(mesh, pinned, 0.0, axis=1)
        rows.append(block)
    out = np.unique(np.vstack(rows), axis=0)
    return out


def _children(parents: np.ndarray, h: float, bot: float) -> np.ndarray:
    """Refine each parent row on a +-h box, always offering 0 per coord so
    the max-0 constraint stays reachable; rows violating it are dropped."""
    offsets = np.array([-h, -h / 2, 0.0, h / 2, h])
    blocks = []
    for row in parents:
        per_coord = []
        for c in row:
            if c == bot:
                per_coord.append(np.array([bot]))
            else:
                vals = np.clip(c + offsets, bot, 0.0)
                vals = np.unique(np.append(vals, 0.0))
                per_coord.append(vals)
        mesh = np.stack(np.meshgrid(*per_coord, indexing="ij"), axis=-1).reshape(-1, len(row))
        blocks.append(mesh)
    rows = np.unique(np.vstack(blocks), axis=0)
    rows = rows[rows.max(axis=1) == 0.0]
    return rows


def _search(gens: np.ndarray, score_fn: Callable[[np.ndarray, np.ndarray], np.ndarray],
            pitch: float, radius: float, keep: int = 12, coarse: int = 13,
            consume: Callable[[np.ndarray, np.ndarray], None] | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Return (best score per objective, best coefficient row per objective)."""
    k = gens.shape[0]
    bot = -(2.0 * radius + 16.0)
    lam = _level0(k, radius, bot, coarse)
    h = radius / (coarse - 1)
    best_scores = None
    best_rows = None
    evaluated = 0
    while True:
        evaluated += len(lam)
        if evaluated > GRID_POINT_GUARD:
            raise ProblemTooLarge(f"oracle grid exceeded {GRID_POINT_GUARD} points")
        z = _combine(lam, gens)
        scores = score_fn(lam, z)
        if consume is not None:
            consume(lam, z)
        top = scores.max(axis=0)
        arg = scores.argmax(axis=0)
        if best_scores is None:
            best_scores = top.copy()
            best_rows = lam[arg].copy()
        else:
            better = top > best_scores
            best_scores = np.where(better, top, best_scores)
            for col in np.nonzero(better)[0]:
                best_rows[col] = lam[arg[col]]
        if h <= pitch:
            return best_scores, best_rows
        order = np.argsort(-scores, axis=0, kind="stable")[:keep]
        parents = lam[np.unique(order.reshape(-1))]
        lam = _children(parents, h, bot)
        h /= 2.0


def _radius_for(p: TropicalPolytope, extra: Sequence[float]) -> float:
    vals = [v for g in p.generators for v in g] + list(extra)
    return (max(vals) - min(vals)) + 2.0


def grid_retract(p: TropicalPolytope, y: Vector, pitch: float = 0.01) -> Vector:
    """Definitional retraction: best admissible down-scaling over searched
    hull members, and the running sup of scaled members, rescaled."""
    _guard(p, pitch)
    p.check_point(y)
    gens = np.asarray(p.generators, dtype=float)
    yv = np.asarray(y, dtype=float)
    n = p.dim
    state = {"m": _NEG, "q": np.full(n, _NEG)}

    def scaled(z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        r = np.minimum(0.0, (yv[None, :] - z).min(axis=1))
        return r, r[:, None] + z

    def score_fn(lam: np.ndarray, z: np.ndarray) -> np.ndarray:
        r, cand = scaled(z)
        return np.column_stack([r, cand])

    def consume(lam: np.ndarray, z: np.ndarray) -> None:
        r, cand = scaled(z)
        state["m"] = max(state["m"], float(r.max()))
        state["q"] = np.maximum(state["q"], cand.max(axis=0))

    _search(gens, score_fn, pitch, _radius_for(p, y), consume=consume)
    return tuple(float(v) for v in state["q"] - state["m"])


def grid_membership(p: TropicalPolytope, y: Vector, pitch: float = 0.01) -> tuple[bool, float]:
    """(member?, best sup-distance from a searched hull member to y)."""
    _guard(p, pitch)
    p.check_point(y)
    gens = np.asarray(p.generators, dtype=float)
    yv = np.asarray(y, dtype=float)

    def score_fn(lam: np.ndarray, z: np.ndarray) -> np.ndarray:
        return -np.abs(z - yv[None, :]).max(axis=1, keepdims=True)

    scores, _ = _search(gens, score_fn, pitch, _radius_for(p, y))
    gap = float(-scores[0])
    return gap <= pitch + 1e-9, gap


def grid_sublevel_margin(p: TropicalPolytope, functionals: Sequence[Functional],
                         values: Vector, pitch: float = 0.01) -> float:
    """Best over searched hull members of min_w(values_w - w(z)).

    Nonnegative iff some hull point sits below the requested values.
    """
    _guard(p, pitch)
    gens = np.asarray(p.generators, dtype=float)
    w = np.array([[_NEG if is_bottom(c) else float(c) for c in f] for f in functionals])
    vals = np.asarray(values, dtype=float)

    def score_fn(lam: np.ndarray, z: np.ndarray) -> np.ndarray:
        img = (z[:, None, :] + w[None, :, :]).max(axis=2)
        return (vals[None, :] - img).min(axis=1, keepdims=True)

    scores, _ = _search(gens, score_fn, pitch, _radius_for(p, list(values)))
    return float(scores[0])


def grid_min_residual(p: TropicalPolytope, f, pitch: float = 0.01,
                      coarse: int = 9, keep: int = 8) -> tuple[Vector, float]:
    """Hull member minimizing the fixed-point residual d(f(z), z)."""
    _guard(p, pitch)
    gens = np.asarray(p.generators, dtype=float)

    if isinstance(f, TropicalLinear):
        mat = np.array([[_NEG if is_bottom(v) else float(v) for v in row] for row in f.matrix])

        def images(z: np.ndarray) -> np.ndarray:
            return (z[:, None, :] + mat[None, :, :]).max(axis=2)
    else:
        from .fixpoint import _as_callable

        apply_f = _as_callable(f, p.dim)

        def images(z: np.ndarray) -> np.ndarray:
            return np.array([apply_f(tuple(float(v) for v in row)) for row in z])

    def score_fn(lam: np.ndarray, z: np.ndarray) -> np.ndarray:
        return -np.abs(images(z) - z).max(axis=1, keepdims=True)

    scores, rows = _search(gens, score_fn, pitch, _radius_for(p, []),
                           keep=keep, coarse=coarse)
    best = _combine(rows[:1], gens)[0]
    return tuple(float(v) for v in best), float(-scores[0])


def _float_rows(a: TropicalLinear | Sequence[Sequence]) -> list[list[float]]:
    rows = a.matrix if isinstance(a, TropicalLinear) else a
    return [[_NEG if is_bottom(v) else float(v) for v in row] for row in rows]


def enumerate_cycle_means(a) -> list[float]:
    """Means of every simple cycle of the matrix digraph (edge j -> i for a
    finite entry at row i, column j)."""
    m = _float_rows(a)
    n = len(m)
    if n > 8:
        raise ProblemTooLarge(f"cycle enumeration supports n <= 8, got {n}")
    succ = [[v for v in range(n) if m[v][u] != _NEG] for u in range(n)]
    means: list[float] = []

    def extend(start: int, node: int, used: list[bool], weight: float, length: int) -> None:
        for nxt in succ[node]:
            if nxt == start:
                means.append((weight + m[nxt][node]) / (length + 1))
            elif nxt > start and not used[nxt]:
                used[nxt] = True
                extend(start, nxt, used, weight + m[nxt][node], length + 1)
                used[nxt] = False

    for s in range(n):
        used = [False] * n
        used[s] = True
        extend(s, s, used, 0.0, 0)
    return means


def max_mean_by_enumeration(a) -> float:
    means = enumerate_cycle_means(a)
    if not means:
        raise NoCycle("the matrix digraph has no cycle")
    return max(means)
