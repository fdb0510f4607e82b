"""hhverify: a verification workbench for Hermite-Hadamard-type trapezoid
bounds on co-ordinated convex function classes.

The package computes every quantity those bounds are made of - identity
terms, kink-moment constants, theorem left/right sides - and checks them
against an exact rational oracle, classical reductions, and sampling-based
convexity-class refuters.
"""

from .bounds import (
    AS_WRITTEN,
    BOUND_KINDS,
    CLASSICAL,
    DIRECT,
    HOLDER,
    HOLDS,
    INCONCLUSIVE,
    POWER_MEAN,
    PROOF_FORM,
    VARIANTS,
    BoundReport,
    ChainReport,
    DeviationTerms,
    IdentityReport,
    bound_classical,
    bound_direct,
    bound_holder,
    bound_power_mean,
    deviation_terms,
    hh_chain_1d,
    hh_chain_2d,
    holder_s_term,
    identity_report,
    identity_residual,
    identity_rhs,
    kink_moment,
)
from .convexity import (
    DEFAULT_PLAN,
    NO_VIOLATION,
    VIOLATED,
    MembershipReport,
    SamplingPlan,
    check_class_first,
    check_class_second,
    check_def1_coordinated,
    margin_class_first,
    margin_class_second,
    margin_coordinated,
)
from .errors import (
    ConfigError,
    ConvergenceError,
    NonFiniteError,
    OutOfDomainError,
    ParameterError,
)
from .geometry import CLASSICAL_PARAMS, GenParams, Rect, required_hull
from .oracle import (
    RationalPoly1,
    RationalPoly2,
    deviation_exact,
    identity_residual_exact,
    poly_integral_1d_exact,
    poly_integral_2d_exact,
    poly_mixed_partial,
)
from .quadrature import (
    DEFAULT_TOL,
    PANEL_DEGREE,
    QuadratureResult,
    Tolerance,
    integrate_1d,
    integrate_2d,
    panel_1d,
    panel_2d,
)
from .surfaces import (
    ANALYTIC,
    FINITE_DIFFERENCE,
    CorpusEntry,
    Surface,
    constant_surface,
    corpus,
    crosscheck_mixed_partial,
    eval_mixed_partial,
    eval_surface,
    fd_mixed_partial,
    get_surface,
    mixed_partial_func,
    poly_surface,
    require_hull_inside,
    scaled_eval_hull,
)

__version__ = "0.1.0"
