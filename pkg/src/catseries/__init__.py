"""catseries: evaluator and cross-verifier for reciprocal-Catalan series.

The central object is the family  g_m(z) = sum 4^n n^m z^n / ((2n+1) C_n)
with C_n the Catalan numbers.  Five independent evaluation routes are
implemented (direct series, closed form via exact polynomial recursions,
trigonometric form, finite-interval integral, Bessel-kernel integral),
plus the golden-ratio weighted closed forms, and a harness cross-checking
every route against every published identity.
"""
from .analytic import (
    f_closed,
    g_closed,
    g_transformed,
    g_trig,
    integrated_closed,
    kernel_A,
    sprugnoli_closed,
)
from .bessel import ImproperIntegralConfig, bessel_k, g_mellin, mellin_kernel_F
from .closedform import ClosedValue, NamedConstant, QuadRational
from .errors import CatSeriesError, DomainError, NotConvergedError
from .exact import (
    binomial,
    catalan,
    factorial,
    fibonacci,
    lucas,
    mellin_lemma_check,
    stirling2,
)
from .fibclosed import (
    GoldenConstants,
    example_table,
    golden_constants,
    thm1_rhs,
    thm2_rhs,
    thm3_instances,
    thm3_rhs,
)
from .polynomials import (
    PolyPair,
    RationalPolynomial,
    p_pair_closed,
    p_pair_recursive,
    q_kernel,
    q_kernel_closed,
)
from .quadrature import (
    IntegralResult,
    QuadratureRule,
    f_integral,
    g_integral,
    gauss_legendre,
    lemma_int_exact,
)
from .series import (
    SeriesResult,
    WeightSpec,
    exact_partial,
    partial_value,
    sum_f,
    sum_g,
    sum_integrated,
    sum_sprugnoli,
    sum_weighted,
)
from .verify import IdentityCase, VerificationReport, default_registry, emit, run

__version__ = "0.1.0"
