"""
app/asymptotic/__init__.py
--------------------------
Heavy-traffic (lambda -> 1) expansions of the Lambert sums and the moments of L.
"""

from app.asymptotic.accuracy import accuracy_by_order, fitted_order, order_of_accuracy_check
from app.asymptotic.expansions import (
    assembled_h_moment,
    moment_expansion,
    s_0_h_expansion,
    s_j_h_expansion,
    substitute_h,
    variance_expansion,
    zagier_expansion,
)
from app.asymptotic.taylor import (
    TaylorCoeffs,
    f_j,
    f_star,
    taylor_coeffs_f_j,
    taylor_coeffs_f_star,
)
from app.series import HExpansion

# h-tables of the Lambert sums are plain HExpansion values
ExpansionTermTable = HExpansion

__all__ = [
    "ExpansionTermTable",
    "HExpansion",
    "TaylorCoeffs",
    "accuracy_by_order",
    "assembled_h_moment",
    "f_j",
    "f_star",
    "fitted_order",
    "moment_expansion",
    "order_of_accuracy_check",
    "s_0_h_expansion",
    "s_j_h_expansion",
    "substitute_h",
    "taylor_coeffs_f_j",
    "taylor_coeffs_f_star",
    "variance_expansion",
    "zagier_expansion",
]
