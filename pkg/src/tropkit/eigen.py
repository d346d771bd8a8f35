"""Max-plus spectral theory: maximum cycle mean and eigenvectors.

The spectral value of a square max-plus matrix is the maximum over
directed cycles of (cycle weight / cycle length), computed with Karp's
recurrence run from all vertices at once, which covers digraphs that are
not strongly connected.  An eigenvector comes from the Kleene star of the
normalized matrix: any column indexed by a node on a critical cycle
satisfies ``A v = lambda v`` in the max-plus sense.
"""

from __future__ import annotations

from .errors import NoCycle
from .maps import TropicalLinear
from .semiring import BOTTOM, Scalar, is_bottom

Matrix = tuple[tuple[Scalar, ...], ...]

_NEG = float("-inf")


def _to_float_rows(a: TropicalLinear | Matrix) -> list[list[float]]:
    rows = a.matrix if isinstance(a, TropicalLinear) else a
    return [[_NEG if is_bottom(v) else float(v) for v in row] for row in rows]


def max_cycle_mean(a: TropicalLinear | Matrix) -> float:
    """Maximum cycle mean via Karp's recurrence.

    ``d[k][v]`` is the best weight of a length-k walk ending at ``v``,
    started anywhere (so cycles in every component are seen).  Raises
    NoCycle when the digraph of finite entries is acyclic.
    """
    m = _to_float_rows(a)
    n = len(m)
    d = [[0.0] * n]
    for _ in range(n):
        prev = d[-1]
        nxt = []
        for v in range(n):
            row = m[v]
            best = _NEG
            for u in range(n):
                w = row[u]
                if w == _NEG or prev[u] == _NEG:
                    continue
                s = prev[u] + w
                if s > best:
                    best = s
            nxt.append(best)
        d.append(nxt)
    lam = None
    for v in range(n):
        if d[n][v] == _NEG:
            continue
        worst = None
        for k in range(n):
            if d[k][v] == _NEG:
                continue
            q = (d[n][v] - d[k][v]) / (n - k)
            if worst is None or q < worst:
                worst = q
        if worst is not None and (lam is None or worst > lam):
            lam = worst
    if lam is None:
        raise NoCycle("the matrix digraph has no cycle")
    return lam


def _matmul(x: list[list[float]], y: list[list[float]]) -> list[list[float]]:
    n = len(x)
    out = [[_NEG] * n for _ in range(n)]
    for i in range(n):
        xi = x[i]
        oi = out[i]
        for k in range(n):
            v = xi[k]
            if v == _NEG:
                continue
            yk = y[k]
            for j in range(n):
                w = yk[j]
                if w == _NEG:
                    continue
                s = v + w
                if s > oi[j]:
                    oi[j] = s
    return out


def _identity(n: int) -> list[list[float]]:
    out = [[_NEG] * n for _ in range(n)]
    for i in range(n):
        out[i][i] = 0.0
    return out


def _emax(x: list[list[float]], y: list[list[float]]) -> list[list[float]]:
    return [[a if a >= b else b for a, b in zip(rx, ry)] for rx, ry in zip(x, y)]


def kleene_star(a: TropicalLinear | Matrix) -> Matrix:
    """``I max A max A^2 ... max A^(n-1)``; finite data needs spectral value <= 0."""
    m = _to_float_rows(a)
    n = len(m)
    star = _identity(n)
    power = _identity(n)
    for _ in range(n - 1):
        power = _matmul(power, m)
        star = _emax(star, power)
    return tuple(
        tuple(BOTTOM if v == _NEG else v for v in row) for row in star
    )


def eigenpair(a: TropicalLinear | Matrix, critical_tol: float = 1e-9) -> tuple[float, tuple[Scalar, ...]]:
    """Spectral value and an eigenvector with ``A v = lambda v``.

    The vector is the Kleene-star column of the normalized matrix at the
    smallest critical node (diagonal of ``B B*`` at zero), shifted so its
    least finite entry is 0.  Entries unreachable from the critical node
    stay BOTTOM.
    """
    m = _to_float_rows(a)
    n = len(m)
    lam = max_cycle_mean(a)
    b = [[v - lam if v != _NEG else _NEG for v in row] for row in m]
    star_rows = _to_float_rows(kleene_star(tuple(tuple(BOTTOM if v == _NEG else v for v in row) for row in b)))
    plus = _matmul(b, star_rows)
    critical = None
    best_diag = None
    for i in range(n):
        dv = plus[i][i]
        if dv == _NEG:
            continue
        if best_diag is None or dv > best_diag:
            best_diag = dv
        if dv >= -critical_tol and critical is None:
            critical = i
    if critical is None:
        # Rounding in lam can push every diagonal slightly below zero.
        critical = max(range(n), key=lambda i: plus[i][i])
    column = [star_rows[r][critical] for r in range(n)]
    low = min(v for v in column if v != _NEG)
    vec: tuple[Scalar, ...] = tuple(BOTTOM if v == _NEG else v - low for v in column)
    return lam, vec
