"""
app/asymptotic/expansions.py
----------------------------
Heavy-traffic expansions of the Lambert sums and of the moments of L.

Purpose:
- Zagier's lattice-sum expansion sum_m f(mx) ~ I_f/x + sum_n b_n B_{n+1} (-1)^n x^n/(n+1)
- Exact h-tables for S_j (j >= 1) and S_0 (with its log(1/(1-lambda))/h term)
- Substitution of 1/h = (1/u) sum (-1)^n C_n u^n/n! into those tables
- Assembly of Ex[L^k] and Var[L] as LogLaurentSeries in u = 1 - lambda

Coefficients stay exact (Fractions plus symbolic zeta/gamma tags) through
the h stage and become floats only when a LogLaurentSeries is built.
"""

import dataclasses
import math
from fractions import Fraction
from math import comb

from app.errors import ParameterError
from app.exact.models import TrafficIntensity
from app.series import (
    HExpansion,
    LogLaurentSeries,
    LogPoly,
    h_power_series,
    prefactor_series,
    series_add,
    series_mul,
    series_scale,
    series_sub,
    zero_series,
)
from app.special import bernoulli_numbers
from app.asymptotic.taylor import taylor_coeffs_f_j, taylor_coeffs_f_star


def zagier_expansion(f, order):
    """
    Expansion of g(x) = sum_{m>=1} f(mx) as x -> 0.

    Args:
        f: TaylorCoeffs with at least `order` coefficients
        order: Keep n = 0 .. order-1 (powers x^0 .. x^(order-1))

    Returns:
        HExpansion with the I_f/x term and exact coefficients
        b_n B_{n+1} (-1)^n / (n+1).
    """
    if order < 1:
        raise ParameterError(f"order must be >= 1, got {order}")
    if len(f.values) < order:
        raise ParameterError(f"need {order} Taylor coefficients, got {len(f.values)}")
    b = bernoulli_numbers(order)
    coeffs = {
        n: f.values[n] * b[n + 1] * (-1) ** n / (n + 1)
        for n in range(order)
    }
    constants = {}
    if f.integral.kind == "rational":
        coeffs[-1] = f.integral.scale
    else:
        constants[-1] = f.integral
    return HExpansion.from_terms(-1, order, coeffs, constants, label=f"g[{f.label}]")


def s_j_h_expansion(j, order):
    """
    S_j as an exact table in h, keeping powers of h below `order`.

        S_j ~ j! zeta(j+1)/h^(j+1) + sum_n (-1)^(n+j-1) B_n B_{n+j} h^(n-1) / (n! (n+j))

    For odd j the table is finite (B_n = 0 for odd n >= 3) and is flagged so.
    j = 0 is delegated to s_0_h_expansion.
    """
    if not isinstance(j, int) or j < 0:
        raise ParameterError(f"j must be an integer >= 0, got {j!r}")
    if j == 0:
        return s_0_h_expansion(order)
    if order + j < 1:
        raise ParameterError(f"order must be >= {1 - j} for S_{j}, got {order}")
    g = zagier_expansion(taylor_coeffs_f_j(j, order + j), order + j)
    table = g.shift(-j)
    # odd j: every nonzero term sits at h^(-j-1), h^-1 or h^0
    finite = j % 2 == 1 and order >= 1
    return dataclasses.replace(table, finite=finite, label=f"S_{j}")


def s_0_h_expansion(order):
    """
    S_0 = log(1/(1-lambda))/h + gamma/h
          + sum_{n<order} (-1)^n B_{n+1} (B_{n+1} - (-1)^(n+1)) h^n / ((n+1)(n+1)!)
    """
    if order < 1:
        raise ParameterError(f"order must be >= 1, got {order}")
    table = zagier_expansion(taylor_coeffs_f_star(order), order)
    return dataclasses.replace(table, log_over_h=Fraction(1), label="S_0")


def substitute_h(table, order):
    """
    Rewrite an h-table as a LogLaurentSeries in u = 1 - lambda.

    The result is truncated at `order`, or earlier when the table itself was
    truncated below that power (h^p = u^p (1 + O(u))).
    """
    effective = order if table.finite else min(order, table.order)
    pieces = []
    for power in table.powers():
        value = float(table.coefficient(power))
        const = table.constant(power)
        if const is not None:
            value += const.value()
        pieces.append(series_scale(h_power_series(power, effective), value))
    if table.log_over_h is not None:
        log_series = LogLaurentSeries.from_terms(0, effective + 2, {0: LogPoly.of(0.0, 1.0)})
        term = series_mul(log_series, h_power_series(-1, effective))
        pieces.append(series_scale(term, float(table.log_over_h)))

    result = zero_series(effective, n_min=table.n_min)
    for piece in pieces:
        result = series_add(result, piece)
    return result


def _moment_weights(k):
    return [(j, comb(k, j) * (-1) ** (k - 1 - j)) for j in range(k)]


def moment_expansion(k, order):
    """
    Ex[L^k] as a series in u = 1 - lambda truncated at u^order.

    Substitutes the h-tables of S_0 .. S_{k-1} into
    Ex[L^k] = ((1-lambda)/lambda) sum_j binom(k, j) (-1)^(k-1-j) S_j.

    Returns:
        LogLaurentSeries with n_min = 1 - k and order field = order, e.g.
        k = 1: log(1/(1-lambda)) + gamma + O(u log(1/u)).
    """
    if not isinstance(k, int) or k < 1:
        raise ParameterError(f"k must be an integer >= 1, got {k!r}")
    if order < 1:
        raise ParameterError(f"order must be >= 1, got {order}")

    combined = zero_series(order, n_min=-k)
    for j, weight in _moment_weights(k):
        s_j = substitute_h(s_j_h_expansion(j, order), order)
        combined = series_add(combined, series_scale(s_j, weight))
    result = series_mul(prefactor_series(order + k + 1), combined)
    return result.truncate(order)


def variance_expansion(order):
    """Var[L] = Ex[L^2] - Ex[L]^2 as a series in u truncated at u^order."""
    if order < 2:
        raise ParameterError(f"variance_expansion needs order >= 2, got {order}")
    first = moment_expansion(1, order)
    return series_sub(moment_expansion(2, order), series_mul(first, first)).truncate(order)


def assembled_h_moment(k, lam, order):
    """
    Ex[L^k] from the h-tables evaluated at h = -log(lambda), before any
    substitution in u; the reference for checking substitute_h.
    """
    intensity = TrafficIntensity.coerce(lam).require_stable()
    h = intensity.h
    total = math.fsum(
        weight * s_j_h_expansion(j, order).evaluate(h) for j, weight in _moment_weights(k)
    )
    return intensity.u / intensity.lam * total
