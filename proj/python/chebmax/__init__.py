"""Evaluation routes and verification scans for the alternating Chebyshev series

    f(x, r) = sum_{k>=1} (-1)^{k+1} r^k T_k(x) / (k + 2).
"""

from ._chebmax import (
    EvalResult,
    Report,
    Route,
    ToleranceUnreachable,
    Violation,
    cheb_t,
    clenshaw_sum,
    consistency_scan,
    dfdx_quad,
    dispatch_eval,
    f_at_one,
    f_closed,
    f_quad,
    f_series,
    fourier_series,
    generating_lhs,
    identity_scan,
    inequality_scan,
    margin,
    monotonicity_scan,
)

__all__ = [
    "EvalResult",
    "Report",
    "Route",
    "ToleranceUnreachable",
    "Violation",
    "cheb_t",
    "clenshaw_sum",
    "consistency_scan",
    "dfdx_quad",
    "dispatch_eval",
    "f_at_one",
    "f_closed",
    "f_quad",
    "f_series",
    "fourier_series",
    "generating_lhs",
    "identity_scan",
    "inequality_scan",
    "margin",
    "monotonicity_scan",
]
