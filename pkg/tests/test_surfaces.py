import math
from fractions import Fraction

import numpy as np
import pytest

from hhverify import (
    GenParams,
    NonFiniteError,
    OutOfDomainError,
    RationalPoly2,
    Rect,
    Surface,
    constant_surface,
    corpus,
    crosscheck_mixed_partial,
    eval_mixed_partial,
    eval_surface,
    get_surface,
    poly_surface,
    required_hull,
    scaled_eval_hull,
)

RECT01 = Rect(0.0, 1.0, 0.0, 1.0)


def test_eval_examples():
    assert eval_surface(get_surface("xy"), 0.5, 0.5) == 0.25
    assert eval_surface(get_surface("x2y2"), 1.0, 1.0) == 1.0


def test_eval_out_of_domain():
    s = Surface("unit-x2y2", RECT01, f=lambda x, y: x * x * y * y)
    with pytest.raises(OutOfDomainError) as exc_info:
        eval_surface(s, 2.0, 1.0)
    assert "2.0" in str(exc_info.value)


def test_mixed_partial_analytic():
    assert eval_mixed_partial(get_surface("x2y2"), 1.0, 1.0) == 4.0


def test_mixed_partial_finite_difference_bilinear():
    s = Surface("fd-xy", Rect(-2, 2, -2, 2), f=lambda x, y: x * y)
    assert s.d2f_kind == "finite-difference"
    assert abs(eval_mixed_partial(s, 0.3, 0.7) - 1.0) <= 1e-6


def test_mixed_partial_constant():
    assert eval_mixed_partial(constant_surface(5.0), 0.4, 0.9) == 0.0


def test_fd_stencil_domain_violation():
    s = Surface("tight", RECT01, f=lambda x, y: x * y)
    with pytest.raises(OutOfDomainError):
        eval_mixed_partial(s, 1.0, 0.5)  # stencil pokes past x = 1


def test_non_finite_mixed_partial():
    s = Surface(
        "blowup",
        Rect(-1, 1, -1, 1),
        f=lambda x, y: x * y,
        d2f=lambda x, y: math.inf,
    )
    with pytest.raises(NonFiniteError):
        eval_mixed_partial(s, 0.0, 0.0)


def test_corpus_contents():
    names = list(corpus())
    for expected in ("xy", "x2y2", "x3y3", "exp_sum", "square_sum", "constant", "neg_squares"):
        assert expected in names
    for entry in corpus().values():
        # every corpus domain is wide enough for m = 0.5 sweeps on the unit square
        assert entry.surface.domain.contains_rect(Rect(0, 2, 0, 2))


def test_fd_agreement_over_corpus():
    """Analytic vs stencil at 100 random interior points per surface."""
    for name, entry in corpus().items():
        worst = crosscheck_mixed_partial(entry.surface, n_points=100, seed=5, rtol=1e-5)
        assert worst <= 1e-5, f"{name}: worst normalized deviation {worst}"


def test_poly_backed_eval_matches_exact():
    rng = np.random.default_rng(3)
    for name, entry in corpus().items():
        if entry.poly is None:
            continue
        s = entry.surface
        for _ in range(20):
            x = float(rng.uniform(-3, 3))
            y = float(rng.uniform(-3, 3))
            exact = float(entry.poly.eval_exact(Fraction(x), Fraction(y)))
            got = float(s.f(x, y))
            assert abs(got - exact) <= 1e-14 * (1.0 + abs(exact))


def test_poly_surface_constructor():
    s = poly_surface("p", RationalPoly2({(2, 1): 3}), Rect(-2, 2, -2, 2))
    assert eval_surface(s, 1.0, 1.0) == 3.0
    assert eval_mixed_partial(s, 1.0, 1.0) == 6.0  # d2(3x^2y) = 6x


def test_scaled_eval_hull_covers_sampling():
    p = GenParams(m1=0.5, m2=0.5)
    hull = scaled_eval_hull(Rect(-1, 1, 0, 1), p)
    # sampled z in [-1, 1] lands in [-2, 2] after scaling
    assert hull == Rect(-2, 2, 0, 2)
    # the corner hull alone keeps the left edge
    assert required_hull(Rect(-1, 1, 0, 1), p) == Rect(-1, 2, 0, 2)


def test_surface_str():
    assert "xy" in str(get_surface("xy"))
