"""
app/special/numbers.py
----------------------
Exact special numbers used by the expansion machinery.

Purpose:
- Bernoulli numbers B_n under t/(e^t - 1) = sum B_k t^k / k! (so B_1 = -1/2)
- Bernoulli polynomials B_n(y)
- Cauchy numbers of the first kind C_n under t/log(1+t) = sum C_k t^k / k!

All values are fractions.Fraction; floating-point recurrences for these
numbers lose every digit by n ~ 20.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb

from app.errors import ParameterError

# Largest supported index for the exact tables
MAX_INDEX = 128


def _check_index(n):
    if not isinstance(n, int) or n < 0:
        raise ParameterError(f"index must be a nonnegative integer, got {n!r}")
    if n > MAX_INDEX:
        raise ParameterError(f"index {n} exceeds the supported cap of {MAX_INDEX}")


@lru_cache(maxsize=None)
def bernoulli_numbers(n):
    """
    Return the tuple (B_0, ..., B_n).

    Uses the recurrence sum_{j=0}^{m} binom(m+1, j) B_j = 0 for m >= 1,
    seeded with B_0 = 1.
    """
    _check_index(n)
    table = [Fraction(1)]
    for m in range(1, n + 1):
        acc = sum(comb(m + 1, j) * table[j] for j in range(m))
        table.append(-acc / (m + 1))
    return tuple(table)


def bernoulli_number(n):
    """
    Exact B_n.

    Args:
        n: Index, 0 <= n <= 128

    Returns:
        Fraction: B_n (B_1 = -1/2, B_n = 0 for odd n >= 3)
    """
    return bernoulli_numbers(n)[n]


def bernoulli_polynomial(n, y):
    """
    Evaluate B_n(y) = sum_k binom(n, k) B_k y^(n-k).

    Args:
        n: Degree, 0 <= n <= 128
        y: Point of evaluation. A Fraction or int gives an exact Fraction,
           a float gives a float.

    Returns:
        B_n(y) in the arithmetic of y.
    """
    b = bernoulli_numbers(n)
    if isinstance(y, (Fraction, int)):
        y = Fraction(y)
        return sum(comb(n, k) * b[k] * y ** (n - k) for k in range(n + 1))

    y = float(y)
    # Horner in y over the coefficients binom(n, k) B_k of y^(n-k)
    value = 0.0
    for k in range(n + 1):
        value = value * y + float(comb(n, k) * b[k])
    return value


@lru_cache(maxsize=None)
def cauchy_numbers(n):
    """
    Return the tuple (C_0, ..., C_n).

    C_k is the integral over [0, 1] of the falling factorial
    x(x-1)...(x-k+1), integrated term by term in exact arithmetic.
    """
    _check_index(n)
    table = []
    poly = [1]  # coefficients of the falling factorial, constant term first
    for k in range(n + 1):
        table.append(sum(Fraction(c, m + 1) for m, c in enumerate(poly)))
        # multiply by (x - k)
        nxt = [0] * (len(poly) + 1)
        for m, c in enumerate(poly):
            nxt[m + 1] += c
            nxt[m] -= k * c
        poly = nxt
    return tuple(table)


def cauchy_number(n):
    """
    Exact C_n (Bernoulli number of the second kind).

    Args:
        n: Index, 0 <= n <= 128

    Returns:
        Fraction: C_n, e.g. C_0 = 1, C_1 = 1/2, C_2 = -1/6
    """
    return cauchy_numbers(n)[n]
