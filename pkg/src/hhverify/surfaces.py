"""Test surfaces: bivariate functions with their mixed second partials.

A Surface carries an evaluation map, an optional analytic mixed partial, and a
declared validity domain.  The domain is deliberately wider than the rectangle
a run integrates over, because the generalized bounds evaluate derivatives at
m-scaled corners (b/m1, d/m2) that land outside that rectangle when m < 1.
Surfaces are immutable; evaluation is pure.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import NonFiniteError, OutOfDomainError
from .geometry import GenParams, Rect, required_hull
from .oracle import RationalPoly2

# Optimal step exponent for a second-order cross difference.
_FD_STEP = sys.float_info.epsilon ** 0.25

ANALYTIC = "analytic"
FINITE_DIFFERENCE = "finite-difference"


@dataclass(frozen=True)
class Surface:
    """A named test function on a declared rectangular domain.

    ``f`` maps (x, y) -> value and should accept numpy arrays as well as
    scalars (all the built-in corpus entries do).  ``d2f`` is the analytic
    mixed partial d^2 f / dx dy, or None to fall back to a finite-difference
    stencil.
    """

    name: str
    domain: Rect
    f: Callable
    d2f: Callable | None = None

    @property
    def d2f_kind(self) -> str:
        return ANALYTIC if self.d2f is not None else FINITE_DIFFERENCE

    def __str__(self):
        return f"{self.name} on {self.domain}"


def eval_surface(s: Surface, x: float, y: float) -> float:
    """Evaluate f(x, y), rejecting points outside the declared domain."""
    if not s.domain.contains(x, y):
        raise OutOfDomainError((x, y), s.domain, context=s.name)
    return float(s.f(x, y))


def fd_mixed_partial(f: Callable, x, y):
    """4-point cross stencil for d^2 f / dx dy with per-coordinate steps.

    h = k = eps^(1/4) * (1 + |coordinate|); works on scalars and arrays.
    """
    h = _FD_STEP * (1.0 + np.abs(x))
    k = _FD_STEP * (1.0 + np.abs(y))
    return (f(x + h, y + k) - f(x + h, y - k) - f(x - h, y + k) + f(x - h, y - k)) / (
        4.0 * h * k
    )


def eval_mixed_partial(s: Surface, x: float, y: float) -> float:
    """Evaluate d^2 f / dx dy at (x, y), analytically or by finite differences."""
    if s.d2f is not None:
        if not s.domain.contains(x, y):
            raise OutOfDomainError((x, y), s.domain, context=s.name)
        value = float(s.d2f(x, y))
    else:
        h = _FD_STEP * (1.0 + abs(x))
        k = _FD_STEP * (1.0 + abs(y))
        for sx, sy in ((x + h, y + k), (x + h, y - k), (x - h, y + k), (x - h, y - k)):
            if not s.domain.contains(sx, sy):
                raise OutOfDomainError(
                    (sx, sy), s.domain, context=f"{s.name} stencil"
                )
        value = float(fd_mixed_partial(s.f, x, y))
    if not np.isfinite(value):
        raise NonFiniteError(f"{s.name} mixed partial at ({x}, {y})", value)
    return value


def mixed_partial_func(s: Surface) -> Callable:
    """Unchecked mixed-partial callable (scalars or arrays).

    Callers are expected to have verified domain coverage up front; this is
    the fast path used by quadrature and the membership refuters.
    """
    if s.d2f is not None:
        return s.d2f
    return lambda x, y: fd_mixed_partial(s.f, x, y)


def crosscheck_mixed_partial(
    s: Surface, n_points: int = 5, seed: int = 0, rtol: float = 1e-5
) -> float:
    """Compare the analytic mixed partial against the stencil at random interior
    points; returns the worst normalized deviation |fd - exact| / (1 + |exact|).

    Raises if the surface has no analytic derivative or the deviation exceeds
    rtol (a wrong hand-supplied derivative is a corpus bug).
    """
    if s.d2f is None:
        raise ValueError(f"{s.name} has no analytic mixed partial to cross-check")
    rng = np.random.default_rng(seed)
    dom = s.domain
    margin_x = 2.0 * _FD_STEP * (1.0 + max(abs(dom.a), abs(dom.b)))
    margin_y = 2.0 * _FD_STEP * (1.0 + max(abs(dom.c), abs(dom.d)))
    worst = 0.0
    for _ in range(n_points):
        x = rng.uniform(dom.a + margin_x, dom.b - margin_x)
        y = rng.uniform(dom.c + margin_y, dom.d - margin_y)
        exact = float(s.d2f(x, y))
        approx = float(fd_mixed_partial(s.f, x, y))
        dev = abs(approx - exact) / (1.0 + abs(exact))
        worst = max(worst, dev)
        if dev > rtol:
            raise AssertionError(
                f"{s.name}: analytic/finite-difference mismatch {dev:.3e} at ({x}, {y})"
            )
    return worst


def scaled_eval_hull(rect: Rect, params: GenParams) -> Rect:
    """Every point a membership refuter may touch when sampling over ``rect``.

    Unlike required_hull (corner points only), the refuter divides *sampled*
    coordinates by m, so the hull must cover a/m1 and c/m2 too when those
    fall left/below of the rectangle.
    """
    xs = (rect.a, rect.b, rect.a / params.m1, rect.b / params.m1)
    ys = (rect.c, rect.d, rect.c / params.m2, rect.d / params.m2)
    return Rect(min(xs), max(xs), min(ys), max(ys))


def require_hull_inside(s: Surface, rect: Rect, params: GenParams) -> None:
    """Raise OutOfDomainError naming the offending scaled corner if the
    evaluation hull pokes outside the surface's declared domain."""
    hull = scaled_eval_hull(rect, params)
    if s.domain.contains_rect(hull):
        return
    named = required_hull(rect, params)
    for x, y in (*named.corners(), *hull.corners()):
        if not s.domain.contains(x, y):
            raise OutOfDomainError(
                (x, y), s.domain, context=f"{s.name}: m-scaled evaluation corner"
            )


def poly_surface(name: str, poly: RationalPoly2, domain: Rect) -> Surface:
    """Surface backed by an exact rational polynomial (analytic derivative)."""
    return Surface(
        name=name,
        domain=domain,
        f=poly.to_float_fn(),
        d2f=poly.mixed_partial().to_float_fn(),
    )


@dataclass(frozen=True)
class CorpusEntry:
    surface: Surface
    poly: RationalPoly2 | None  # exact representation when one exists
    formula: str


_WIDE = Rect(-8.0, 8.0, -8.0, 8.0)


def _build_corpus() -> dict[str, CorpusEntry]:
    entries: dict[str, CorpusEntry] = {}

    def add_poly(name, terms, formula):
        poly = RationalPoly2(terms)
        entries[name] = CorpusEntry(poly_surface(name, poly, _WIDE), poly, formula)

    add_poly("xy", {(1, 1): 1}, "x*y")
    add_poly("x2y2", {(2, 2): 1}, "x^2*y^2")
    add_poly("x3y3", {(3, 3): 1}, "x^3*y^3")
    add_poly("square_sum", {(2, 0): 1, (1, 1): 2, (0, 2): 1}, "(x+y)^2")
    add_poly("constant", {(0, 0): 1}, "1")
    # Deliberately not co-ordinated convex: both partial maps are concave.
    add_poly("neg_squares", {(2, 0): -1, (0, 2): -1}, "-x^2-y^2")

    exp_sum = Surface(
        name="exp_sum",
        domain=_WIDE,
        f=lambda x, y: np.exp(x + y),
        d2f=lambda x, y: np.exp(x + y),
    )
    entries["exp_sum"] = CorpusEntry(exp_sum, None, "exp(x+y)")
    return entries


_CORPUS = _build_corpus()


def corpus() -> dict[str, CorpusEntry]:
    """The registered test surfaces, keyed by name (insertion order stable)."""
    return dict(_CORPUS)


def get_surface(name: str) -> Surface:
    try:
        return _CORPUS[name].surface
    except KeyError:
        raise KeyError(
            f"unknown surface {name!r}; registered: {', '.join(_CORPUS)}"
        ) from None


def constant_surface(value: float, domain: Rect = _WIDE) -> Surface:
    """A constant surface (zero mixed partial), for ad-hoc checks."""
    return Surface(
        name=f"constant({value})",
        domain=domain,
        f=lambda x, y: value + 0.0 * (x + y),
        d2f=lambda x, y: 0.0 * (x + y),
    )
