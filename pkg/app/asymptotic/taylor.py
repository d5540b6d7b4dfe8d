"""
app/asymptotic/taylor.py
------------------------
Taylor data of the summands whose lattice sums give the Lambert series.

    f_j(x)  = x^j / (e^x - 1)              (j >= 1), integral j! zeta(j+1)
    f*(x)   = 1/(e^x - 1) - e^(-x)/x,       integral gamma

With lambda = exp(-h): S_j = h^-j sum_m f_j(mh), and
S_0 = log(1/(1 - lambda))/h + sum_m f*(mh).
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from app.errors import ParameterError
from app.series import SymbolicConstant
from app.special import bernoulli_numbers


@dataclass(frozen=True)
class TaylorCoeffs:
    """
    f(x) = sum_n values[n] x^n about 0, with I_f = integral_0^inf f.

    Attributes:
        values: Tuple of Fraction, entry n is b_n
        integral: SymbolicConstant for I_f
        label: Name used in printed tables
    """

    values: tuple
    integral: SymbolicConstant
    label: str = ""

    def __post_init__(self):
        if not self.values:
            raise ParameterError("TaylorCoeffs needs at least one coefficient")
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))

    def evaluate(self, x):
        """Truncated Taylor polynomial at x (float)."""
        value = 0.0
        for b in reversed(self.values):
            value = value * x + float(b)
        return value


def taylor_coeffs_f_j(j, n_terms):
    """
    Coefficients of x^j/(e^x - 1): B_n/n! placed at exponent n + j - 1.

    Args:
        j: >= 1
        n_terms: Number of exponents 0 .. n_terms-1 to tabulate
    """
    if not isinstance(j, int) or j < 1:
        raise ParameterError(f"j must be an integer >= 1, got {j!r}")
    if n_terms < 1:
        raise ParameterError(f"n_terms must be >= 1, got {n_terms}")
    b = bernoulli_numbers(max(0, n_terms - j))
    values = [Fraction(0)] * n_terms
    for n in range(n_terms - j + 1):
        values[n + j - 1] = b[n] / factorial(n)
    return TaylorCoeffs(tuple(values), SymbolicConstant.factorial_zeta(j), f"f_{j}")


def taylor_coeffs_f_star(n_terms):
    """Coefficients b_n = (B_{n+1} - (-1)^(n+1)) / (n+1)! of f*."""
    if n_terms < 1:
        raise ParameterError(f"n_terms must be >= 1, got {n_terms}")
    b = bernoulli_numbers(n_terms)
    values = tuple(
        (b[n + 1] - (-1) ** (n + 1)) / factorial(n + 1) for n in range(n_terms)
    )
    return TaylorCoeffs(values, SymbolicConstant.gamma(), "f*")


def f_j(j, x):
    """x^j / (e^x - 1) in floating point."""
    return x ** j / math.expm1(x)


def f_star(x):
    """1/(e^x - 1) - e^(-x)/x in floating point."""
    return 1.0 / math.expm1(x) - math.exp(-x) / x
