"""Adaptive Gauss-Legendre integration on intervals and rectangles.

The panel rule is a fixed 12-node Gauss-Legendre formula (design degree 23,
i.e. exact for polynomials up to that degree).  Adaptive bisection compares a
panel against its two (four, in 2D) children and accepts when the difference
meets the panel's share of the error budget.  Known kink locations should be
passed as mandatory split points; adaptivity is a fallback, not a kink finder.

Error estimates are the accumulated coarse-vs-refined differences, floored at
the roundoff scale of the result; the reported value is always the refined
one, so the estimate is conservative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConvergenceError, NonFiniteError, ParameterError
from .geometry import Rect

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(12)
_GL = list(zip(_GL_NODES.tolist(), _GL_WEIGHTS.tolist()))

PANEL_DEGREE = 2 * len(_GL) - 1


@dataclass(frozen=True)
class Tolerance:
    """Quadrature stopping rule: relative target with an absolute floor."""

    rel: float = 1e-10
    abs_floor: float = 1e-12
    max_depth: int = 20


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    panels: int


def _roundoff(value: float) -> float:
    return 2.0**-50 * (1.0 + abs(value))


def panel_1d(g: Callable[[float], float], lo: float, hi: float) -> float:
    """Single 12-node Gauss-Legendre panel on [lo, hi]."""
    half = 0.5 * (hi - lo)
    mid = 0.5 * (lo + hi)
    total = 0.0
    for t, w in _GL:
        x = mid + half * t
        fx = float(g(x))
        if not math.isfinite(fx):
            raise NonFiniteError(f"x = {x}", fx)
        total += w * fx
    return half * total


def panel_2d(g: Callable[[float, float], float], a: float, b: float, c: float, d: float) -> float:
    """Single tensor-product Gauss-Legendre panel on [a, b] x [c, d]."""
    hx, mx = 0.5 * (b - a), 0.5 * (a + b)
    hy, my = 0.5 * (d - c), 0.5 * (c + d)
    total = 0.0
    for tx, wx in _GL:
        x = mx + hx * tx
        row = 0.0
        for ty, wy in _GL:
            y = my + hy * ty
            fxy = float(g(x, y))
            if not math.isfinite(fxy):
                raise NonFiniteError(f"(x, y) = ({x}, {y})", fxy)
            row += wy * fxy
        total += wx * row
    return hx * hy * total


def _adapt_1d(g, lo, hi, budget, depth, tol):
    whole = panel_1d(g, lo, hi)
    mid = 0.5 * (lo + hi)
    if not (lo < mid < hi):
        return whole, 0.0, 1
    refined = panel_1d(g, lo, mid) + panel_1d(g, mid, hi)
    err = abs(refined - whole)
    if err <= budget or depth >= tol.max_depth:
        return refined, err, 2
    lv, le, ln = _adapt_1d(g, lo, mid, 0.5 * budget, depth + 1, tol)
    rv, re, rn = _adapt_1d(g, mid, hi, 0.5 * budget, depth + 1, tol)
    return lv + rv, le + re, ln + rn


def integrate_1d(
    g: Callable[[float], float],
    lo: float,
    hi: float,
    tol: Tolerance | None = None,
    splits: tuple[float, ...] = (),
) -> QuadratureResult:
    """Adaptively integrate g over [lo, hi].

    ``splits`` lists interior points where the integrand has a kink (e.g. the
    1/2 coming from |1 - 2t| factors); each subsegment is refined separately.
    Raises ConvergenceError (carrying the best-effort result) if the total
    error estimate still exceeds the budget after max_depth bisections.
    """
    if tol is None:
        tol = DEFAULT_TOL
    if not lo < hi:
        raise ParameterError(f"empty interval [{lo}, {hi}]")
    inner = sorted({float(s) for s in splits if lo < s < hi})
    edges = [lo, *inner, hi]
    segments = list(zip(edges[:-1], edges[1:]))
    rough = sum(panel_1d(g, a, b) for a, b in segments)
    budget = max(tol.abs_floor, tol.rel * abs(rough))
    total_width = hi - lo
    value = 0.0
    err = 0.0
    panels = 0
    for a, b in segments:
        v, e, n = _adapt_1d(g, a, b, budget * (b - a) / total_width, 0, tol)
        value += v
        err += e
        panels += n
    result = QuadratureResult(value, max(err, _roundoff(value)), panels)
    if err > budget:
        raise ConvergenceError(
            f"1d integral did not converge to {budget:.3e} within depth "
            f"{tol.max_depth} (error estimate {err:.3e})",
            result,
        )
    return result


def _adapt_2d(g, a, b, c, d, budget, depth, tol):
    whole = panel_2d(g, a, b, c, d)
    mx, my = 0.5 * (a + b), 0.5 * (c + d)
    if not (a < mx < b and c < my < d):
        return whole, 0.0, 1
    quads = (
        (a, mx, c, my),
        (mx, b, c, my),
        (a, mx, my, d),
        (mx, b, my, d),
    )
    refined = sum(panel_2d(g, *cell) for cell in quads)
    err = abs(refined - whole)
    if err <= budget or depth >= tol.max_depth:
        return refined, err, 4
    value = 0.0
    total_err = 0.0
    panels = 0
    for cell in quads:
        v, e, n = _adapt_2d(g, *cell, 0.25 * budget, depth + 1, tol)
        value += v
        total_err += e
        panels += n
    return value, total_err, panels


def integrate_2d(
    g: Callable[[float, float], float],
    r: Rect,
    tol: Tolerance | None = None,
    x_splits: tuple[float, ...] = (),
    y_splits: tuple[float, ...] = (),
) -> QuadratureResult:
    """Adaptively integrate g over the rectangle r (tensor-product panels).

    ``x_splits``/``y_splits`` are mandatory kink lines, handled like the 1D
    splits.  Same error contract as integrate_1d.
    """
    if tol is None:
        tol = DEFAULT_TOL
    xs = [r.a, *sorted({float(s) for s in x_splits if r.a < s < r.b}), r.b]
    ys = [r.c, *sorted({float(s) for s in y_splits if r.c < s < r.d}), r.d]
    cells = [
        (xa, xb, ya, yb)
        for xa, xb in zip(xs[:-1], xs[1:])
        for ya, yb in zip(ys[:-1], ys[1:])
    ]
    rough = sum(panel_2d(g, *cell) for cell in cells)
    budget = max(tol.abs_floor, tol.rel * abs(rough))
    value = 0.0
    err = 0.0
    panels = 0
    for xa, xb, ya, yb in cells:
        share = (xb - xa) * (yb - ya) / r.area
        v, e, n = _adapt_2d(g, xa, xb, ya, yb, budget * share, 0, tol)
        value += v
        err += e
        panels += n
    result = QuadratureResult(value, max(err, _roundoff(value)), panels)
    if err > budget:
        raise ConvergenceError(
            f"2d integral did not converge to {budget:.3e} within depth "
            f"{tol.max_depth} (error estimate {err:.3e})",
            result,
        )
    return result
