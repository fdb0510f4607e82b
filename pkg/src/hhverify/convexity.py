"""Sampling-based membership refuters for the co-ordinated convexity notions.

Each checker evaluates margin = RHS - LHS of the defining inequality over a
deterministic sample set and reports the worst margin with its witness.  A
negative margin beyond the tolerance is a concrete violation; "no violation
found" is exactly that - these are refuters, not certifiers, because the
conditions quantify over a continuum.

The sample set couples the pair of base points with a dense (lam, mu) grid:
the four rectangle corner pairs (the degenerate instances the integral bounds
actually consume), grid_per_axis^2 random pairs, each crossed with a
(2*grid_per_axis - 1)^2 grid over the unit square, plus fully random trials.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonFiniteError
from .geometry import GenParams, Rect
from .surfaces import Surface, require_hull_inside

NO_VIOLATION = "no-violation-found"
VIOLATED = "violated"

# lam^0 with lam = 0 must evaluate to 1 (limit convention); np.power does.
_TRIVIAL = GenParams()


@dataclass(frozen=True)
class SamplingPlan:
    """Deterministic sampling layout for the refuters."""

    grid_per_axis: int = 9
    random_trials: int = 10000
    seed: int = 0
    tolerance: float = 1e-9

    def __post_init__(self):
        if self.grid_per_axis < 2:
            raise ValueError("grid_per_axis must be >= 2")
        if self.random_trials < 0:
            raise ValueError("random_trials must be >= 0")
        if self.tolerance < 0:
            raise ValueError("tolerance must be >= 0")


DEFAULT_PLAN = SamplingPlan()


@dataclass(frozen=True)
class MembershipReport:
    verdict: str
    worst_margin: float
    witness: tuple  # (x, y, z, w, lam, mu)
    samples_checked: int


def margin_coordinated(f, x, y, z, w, lam, mu):
    """RHS - LHS of the plain co-ordinated convexity inequality.

    Algebraically the first-sense margin at s = alpha = m = 1; kept as the
    shared kernel so the trivial-parameter coincidence is bitwise.
    """
    return margin_class_first(f, _TRIVIAL, x, y, z, w, lam, mu)


def margin_class_first(f, p: GenParams, x, y, z, w, lam, mu):
    """RHS - LHS of the first-sense inequality (weights 1 - lam^(alpha*s))."""
    wl = np.power(lam, p.theta1)
    wm = np.power(mu, p.theta2)
    rhs = (
        wl * wm * f(x, y)
        + p.m2 * wl * (1.0 - wm) * f(x, w / p.m2)
        + p.m1 * wm * (1.0 - wl) * f(z / p.m1, y)
        + p.m1 * p.m2 * (1.0 - wl) * (1.0 - wm) * f(z / p.m1, w / p.m2)
    )
    lhs = f(lam * x + (1.0 - lam) * z, mu * y + (1.0 - mu) * w)
    return rhs - lhs


def margin_class_second(f, p: GenParams, x, y, z, w, lam, mu):
    """RHS - LHS of the second-sense inequality (weights (1 - lam^alpha)^s)."""
    wl = np.power(lam, p.theta1)
    wm = np.power(mu, p.theta2)
    cl = np.power(1.0 - np.power(lam, p.alpha1), p.s1)
    cm = np.power(1.0 - np.power(mu, p.alpha2), p.s2)
    rhs = (
        wl * wm * f(x, y)
        + p.m2 * wl * cm * f(x, w / p.m2)
        + p.m1 * wm * cl * f(z / p.m1, y)
        + p.m1 * p.m2 * cl * cm * f(z / p.m1, w / p.m2)
    )
    lhs = f(lam * x + (1.0 - lam) * z, mu * y + (1.0 - mu) * w)
    return rhs - lhs


def _batch_eval(f, xs, ys):
    """Vectorized call with a scalar fallback for array-shy callables."""
    try:
        out = np.asarray(f(xs, ys), dtype=float)
        if out.shape == xs.shape:
            return out
    except Exception:
        pass
    return np.fromiter(
        (float(f(float(x), float(y))) for x, y in zip(xs, ys)),
        dtype=float,
        count=len(xs),
    )


def _samples(rect: Rect, plan: SamplingPlan):
    rng = np.random.default_rng(plan.seed)
    npairs = plan.grid_per_axis**2
    corner_pairs = np.array(
        [
            (rect.a, rect.c, rect.b, rect.d),
            (rect.b, rect.d, rect.a, rect.c),
            (rect.a, rect.d, rect.b, rect.c),
            (rect.b, rect.c, rect.a, rect.d),
        ]
    )
    rand_pairs = np.column_stack(
        [
            rng.uniform(rect.a, rect.b, npairs),
            rng.uniform(rect.c, rect.d, npairs),
            rng.uniform(rect.a, rect.b, npairs),
            rng.uniform(rect.c, rect.d, npairs),
        ]
    )
    pairs = np.vstack([corner_pairs, rand_pairs])

    n_grid = 2 * plan.grid_per_axis - 1
    axis = np.linspace(0.0, 1.0, n_grid)
    gl, gm = np.meshgrid(axis, axis, indexing="ij")
    gl, gm = gl.ravel(), gm.ravel()

    x = np.repeat(pairs[:, 0], gl.size)
    y = np.repeat(pairs[:, 1], gl.size)
    z = np.repeat(pairs[:, 2], gl.size)
    w = np.repeat(pairs[:, 3], gl.size)
    lam = np.tile(gl, len(pairs))
    mu = np.tile(gm, len(pairs))

    if plan.random_trials:
        x = np.concatenate([x, rng.uniform(rect.a, rect.b, plan.random_trials)])
        y = np.concatenate([y, rng.uniform(rect.c, rect.d, plan.random_trials)])
        z = np.concatenate([z, rng.uniform(rect.a, rect.b, plan.random_trials)])
        w = np.concatenate([w, rng.uniform(rect.c, rect.d, plan.random_trials)])
        lam = np.concatenate([lam, rng.uniform(0.0, 1.0, plan.random_trials)])
        mu = np.concatenate([mu, rng.uniform(0.0, 1.0, plan.random_trials)])
    return x, y, z, w, lam, mu


def _refute(s: Surface, rect: Rect, plan: SamplingPlan, p: GenParams, margin_fn):
    x, y, z, w, lam, mu = _samples(rect, plan)
    batched = lambda xs, ys: _batch_eval(s.f, xs, ys)
    margins = margin_fn(batched, p, x, y, z, w, lam, mu)
    bad = ~np.isfinite(margins)
    if bad.any():
        i = int(np.flatnonzero(bad)[0])
        raise NonFiniteError(
            f"{s.name} margin at sample ({x[i]}, {y[i]}, {z[i]}, {w[i]}, {lam[i]}, {mu[i]})",
            float(margins[i]),
        )
    worst = float(margins.min())
    ties = np.flatnonzero(margins == worst)
    cols = (x, y, z, w, lam, mu)
    witness = min(tuple(float(c[i]) for c in cols) for i in ties)
    # Re-evaluate the witness through the scalar path so the reported margin
    # is reproducible from the witness alone.
    worst_margin = float(margin_fn(s.f, p, *witness))
    verdict = VIOLATED if worst_margin < -plan.tolerance else NO_VIOLATION
    return MembershipReport(
        verdict=verdict,
        worst_margin=worst_margin,
        witness=witness,
        samples_checked=int(margins.size),
    )


def check_def1_coordinated(
    s: Surface, r: Rect, plan: SamplingPlan = DEFAULT_PLAN
) -> MembershipReport:
    """Refute (or fail to refute) plain co-ordinated convexity of s over r."""
    require_hull_inside(s, r, _TRIVIAL)
    return _refute(s, r, plan, _TRIVIAL, _margin_dispatch_first)


def check_class_first(
    g: Surface, r: Rect, p: GenParams, plan: SamplingPlan = DEFAULT_PLAN
) -> MembershipReport:
    """Refute first-sense class membership of g over r at parameters p."""
    require_hull_inside(g, r, p)
    return _refute(g, r, plan, p, _margin_dispatch_first)


def check_class_second(
    g: Surface, r: Rect, p: GenParams, plan: SamplingPlan = DEFAULT_PLAN
) -> MembershipReport:
    """Refute second-sense class membership of g over r at parameters p."""
    require_hull_inside(g, r, p)
    return _refute(g, r, plan, p, _margin_dispatch_second)


def _margin_dispatch_first(f, p, x, y, z, w, lam, mu):
    return margin_class_first(f, p, x, y, z, w, lam, mu)


def _margin_dispatch_second(f, p, x, y, z, w, lam, mu):
    return margin_class_second(f, p, x, y, z, w, lam, mu)
