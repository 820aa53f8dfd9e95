"""Exact-arithmetic toolkit for generalized Delannoy polynomials.

The package constructs the polynomial family by five independent routes,
machine-verifies its identities, recurrences, special values, and
inequalities with exact rational arithmetic, and scans the open Turán-type
conjecture for counterexamples.
"""

from .analysis import (
    GridSpec,
    check_positivity,
    check_product_lower_bound,
    default_conjecture_grid,
    default_inequality_grid,
    scan_conjecture,
    turan_value,
)
from .bipoly import BiPoly, TruncatedSeries, binom_poly, binomial_series, series_mul
from .dcore import (
    DSequence,
    EvalPoint,
    Route,
    d_direct,
    d_eval,
    d_eval_sequence,
    d_newform,
    d_sequence,
    d_series,
    d_threeterm,
    d_twoterm,
    delannoy_dp,
    jacobi_eval,
    meixner_eval,
    poly_eval,
)
from .exactnum import (
    ExactRational,
    binom_gen,
    binom_int,
    format_rational,
    parse_rational,
    pochhammer,
)
from .hyper import (
    HyperSpec,
    clausen_product_check,
    d_via_hyper,
    d_via_hyper_companion,
    hyper2f1,
    hyper_eval,
)
from .reports import Mode, ScanReport, VerifyReport
from .verify import (
    DEFAULT_DEPTHS,
    SUITE_IDS,
    SuiteConfig,
    deterministic_points,
    run_suite,
    suite_passed,
    verify_clausen_product,
    verify_hyper_bridge,
    verify_jacobi,
    verify_linearization,
    verify_meixner,
    verify_newform_consequences,
    verify_parametric_square,
    verify_recurrences,
    verify_shift_identities,
    verify_special_values,
    verify_square,
    verify_weighted_square_sum,
)

__all__ = [
    "BiPoly",
    "DEFAULT_DEPTHS",
    "DSequence",
    "EvalPoint",
    "ExactRational",
    "GridSpec",
    "HyperSpec",
    "Mode",
    "Route",
    "SUITE_IDS",
    "ScanReport",
    "SuiteConfig",
    "TruncatedSeries",
    "VerifyReport",
    "binom_gen",
    "binom_int",
    "binom_poly",
    "binomial_series",
    "check_positivity",
    "check_product_lower_bound",
    "clausen_product_check",
    "d_direct",
    "d_eval",
    "d_eval_sequence",
    "d_newform",
    "d_sequence",
    "d_series",
    "d_threeterm",
    "d_twoterm",
    "d_via_hyper",
    "d_via_hyper_companion",
    "default_conjecture_grid",
    "default_inequality_grid",
    "delannoy_dp",
    "deterministic_points",
    "format_rational",
    "hyper2f1",
    "hyper_eval",
    "jacobi_eval",
    "meixner_eval",
    "parse_rational",
    "pochhammer",
    "poly_eval",
    "run_suite",
    "scan_conjecture",
    "series_mul",
    "suite_passed",
    "turan_value",
    "verify_clausen_product",
    "verify_hyper_bridge",
    "verify_jacobi",
    "verify_linearization",
    "verify_meixner",
    "verify_newform_consequences",
    "verify_parametric_square",
    "verify_recurrences",
    "verify_shift_identities",
    "verify_special_values",
    "verify_square",
    "verify_weighted_square_sum",
]

__version__ = "0.1.0"
