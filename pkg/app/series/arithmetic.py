"""
app/series/arithmetic.py
------------------------
Arithmetic on truncated series in u = 1 - lambda.

Purpose:
- Ring operations with truncation order carried as data
- The building blocks of the heavy-traffic substitution: 1/h, h, (1-lambda)/lambda
- Numerical evaluation at a traffic intensity

Order rules:
- sum:     order = min(a.order, b.order), n_min = min(a.n_min, b.n_min)
- product: order = min(a.n_min + b.order, b.n_min + a.order),
           n_min = a.n_min + b.n_min
"""

import math
from math import factorial

from app.errors import ParameterError
from app.exact.models import TrafficIntensity
from app.series.models import LogLaurentSeries, LogPoly
from app.special import cauchy_numbers


def zero_series(order, n_min=0):
    return LogLaurentSeries.from_terms(min(n_min, order), order, {})


def one_series(order):
    return LogLaurentSeries.from_terms(0, order, {0: LogPoly.of(1.0)})


def series_add(a, b):
    """Coefficient-wise sum, truncated at the smaller order."""
    order = min(a.order, b.order)
    terms = {}
    for source in (a, b):
        for power, poly in source.coeffs:
            if power < order:
                terms[power] = terms.get(power, LogPoly()) + poly
    return LogLaurentSeries.from_terms(min(a.n_min, b.n_min), order, terms)


def series_scale(a, factor):
    return LogLaurentSeries.from_terms(
        a.n_min, a.order, {p: poly * factor for p, poly in a.coeffs}
    )


def series_sub(a, b):
    return series_add(a, series_scale(b, -1.0))


def series_mul(a, b):
    """
    Truncated Cauchy product.

    Raises:
        LogDegreeOverflow: a retained product coefficient would need L^3 or higher.
    """
    order = min(a.n_min + b.order, b.n_min + a.order)
    terms = {}
    for i, x in a.coeffs:
        for j, y in b.coeffs:
            power = i + j
            if power >= order:
                continue
            terms[power] = terms.get(power, LogPoly()) + x * y
    return LogLaurentSeries.from_terms(a.n_min + b.n_min, order, terms)


def _series_power(base, exponent, identity_order):
    result = one_series(identity_order)
    for _ in range(exponent):
        result = series_mul(result, base)
    return result


def inv_h_series(order):
    """
    1/h = (1/u) sum_{n < order} (-1)^n C_n u^n / n!, with h = -log(lambda).

    Args:
        order: Number of retained terms, >= 1

    Returns:
        LogLaurentSeries with n_min = -1 and order field order - 1.
    """
    if order < 1:
        raise ParameterError(f"inv_h_series needs order >= 1, got {order}")
    c = cauchy_numbers(order - 1)
    terms = {
        n - 1: float((-1) ** n * c[n] / factorial(n))
        for n in range(order)
    }
    return LogLaurentSeries.from_terms(-1, order - 1, terms)


def inv_h_power(j_plus_1, order):
    """
    (1/h)^p by repeated multiplication of inv_h_series(order).

    The result has n_min = -p and order field order - p.
    """
    if j_plus_1 < 1:
        raise ParameterError(f"power must be >= 1, got {j_plus_1}")
    base = inv_h_series(order)
    result = base
    for _ in range(j_plus_1 - 1):
        result = series_mul(result, base)
    return result


def h_series(order):
    """h = -log(1 - u) = sum_{1 <= n < order} u^n / n."""
    terms = {n: 1.0 / n for n in range(1, order)}
    return LogLaurentSeries.from_terms(min(1, order), order, terms)


def h_power_series(power, order):
    """
    h^power as a series in u truncated exactly at `order`.

    Negative powers come from inv_h_power with enough extra terms to absorb
    the order lost by multiplying poles.
    """
    if power == 0:
        return one_series(order)
    if power < 0:
        p = -power
        if order + p < 1:
            return zero_series(order, n_min=power)
        return inv_h_power(p, order + p).truncate(order)
    if order <= power:
        return zero_series(order, n_min=power)
    return _series_power(h_series(order), power, order).truncate(order)


def prefactor_series(order):
    """(1 - lambda)/lambda = sum_{1 <= n < order} u^n."""
    if order < 2:
        raise ParameterError(f"prefactor_series needs order >= 2, got {order}")
    return LogLaurentSeries.from_terms(1, order, {n: 1.0 for n in range(1, order)})


def evaluate(s, lam):
    """
    Evaluate the truncated series at lambda (no remainder estimate).

    Args:
        s: LogLaurentSeries
        lam: TrafficIntensity or float with 0 < lambda < 1

    Returns:
        float: sum_n coeffs[n](L) u^n with u = 1 - lambda, L = log(1/u)
    """
    intensity = TrafficIntensity.coerce(lam).require_stable()
    u = intensity.u
    log_inv_u = intensity.log_inv_u
    return math.fsum(poly(log_inv_u) * u ** power for power, poly in s.coeffs)
