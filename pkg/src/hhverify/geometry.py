"""Rectangles and the generalized-convexity parameter tuple."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError


@dataclass(frozen=True)
class Rect:
    """Axis-aligned rectangle [a, b] x [c, d] with a < b and c < d (strict)."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        if not (self.a < self.b and self.c < self.d):
            raise ParameterError(
                f"degenerate rectangle [{self.a}, {self.b}] x [{self.c}, {self.d}]"
            )

    @property
    def width(self) -> float:
        return self.b - self.a

    @property
    def height(self) -> float:
        return self.d - self.c

    @property
    def area(self) -> float:
        return self.width * self.height

    @property
    def mid_x(self) -> float:
        return 0.5 * (self.a + self.b)

    @property
    def mid_y(self) -> float:
        return 0.5 * (self.c + self.d)

    def corners(self):
        """The four corners, in (a,c), (a,d), (b,c), (b,d) order."""
        return ((self.a, self.c), (self.a, self.d), (self.b, self.c), (self.b, self.d))

    def contains(self, x: float, y: float) -> bool:
        return self.a <= x <= self.b and self.c <= y <= self.d

    def contains_rect(self, other: "Rect") -> bool:
        return (
            self.a <= other.a
            and other.b <= self.b
            and self.c <= other.c
            and other.d <= self.d
        )

    def __str__(self):
        return f"[{self.a}, {self.b}] x [{self.c}, {self.d}]"


@dataclass(frozen=True)
class GenParams:
    """Parameters (s1, s2, alpha1, alpha2, m1, m2) of the generalized convexity
    classes, plus the integrability exponent q.

    s1, s2 in (0, 1]; alpha1, alpha2 in [0, 1]; m1, m2 in (0, 1] (m = 0 would
    make the scaled evaluation points b/m1, d/m2 undefined); q >= 1.
    """

    s1: float = 1.0
    s2: float = 1.0
    alpha1: float = 1.0
    alpha2: float = 1.0
    m1: float = 1.0
    m2: float = 1.0
    q: float = 1.0

    def __post_init__(self):
        for name in ("s1", "s2"):
            v = getattr(self, name)
            if not 0.0 < v <= 1.0:
                raise ParameterError(f"{name} = {v} outside (0, 1]")
        for name in ("alpha1", "alpha2"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ParameterError(f"{name} = {v} outside [0, 1]")
        for name in ("m1", "m2"):
            v = getattr(self, name)
            if not 0.0 < v <= 1.0:
                raise ParameterError(f"{name} = {v} outside (0, 1]")
        if not self.q >= 1.0:
            raise ParameterError(f"q = {self.q} must be >= 1")

    @property
    def theta1(self) -> float:
        return self.alpha1 * self.s1

    @property
    def theta2(self) -> float:
        return self.alpha2 * self.s2

    @property
    def p(self) -> float:
        """Conjugate exponent q/(q-1); only defined for q > 1."""
        if self.q <= 1.0:
            raise ParameterError("conjugate exponent requires q > 1")
        return self.q / (self.q - 1.0)


CLASSICAL_PARAMS = GenParams()


def required_hull(rect: Rect, params: GenParams) -> Rect:
    """Smallest rectangle containing {a, b, b/m1} x {c, d, d/m2}.

    These are the evaluation points the bounds touch.  Callers must verify the
    hull lies inside a surface's declared domain before evaluating a bound.
    When coordinates are negative and m < 1 the scaled point moves left/down,
    so the hull is the convex hull of all three abscissae per axis.
    """
    xs = (rect.a, rect.b, rect.b / params.m1)
    ys = (rect.c, rect.d, rect.d / params.m2)
    return Rect(min(xs), max(xs), min(ys), max(ys))
