"""
app/asymptotic/accuracy.py
--------------------------
Empirical order of accuracy of truncated expansions.

The remainder integral of the Euler-Maclaurin argument is never computed;
instead the error against an exact evaluator is measured on a decreasing
sequence of h and its log-log slope is reported.
"""

import math

import numpy as np

from app.errors import ConvergenceError, ParameterError


def _as_callable(expansion):
    if callable(expansion):
        return expansion
    return expansion.evaluate


def _errors(expansion, exact_evaluator, h_sequence):
    hs = [float(h) for h in h_sequence]
    if len(hs) < 3:
        raise ParameterError("need at least three values of h")
    if any(b >= a for a, b in zip(hs, hs[1:])):
        raise ParameterError("h_sequence must be strictly decreasing")
    approx = _as_callable(expansion)
    errors = [abs(exact_evaluator(h) - approx(h)) for h in hs]
    if any(not math.isfinite(e) or e == 0.0 for e in errors):
        raise ConvergenceError(f"cannot fit a slope to errors {errors}")
    steps = [b - a for a, b in zip(errors, errors[1:])]
    if not (all(s < 0 for s in steps) or all(s > 0 for s in steps)):
        raise ConvergenceError(f"error sequence is not monotone: {errors}")
    return hs, errors


def order_of_accuracy_check(expansion, exact_evaluator, h_sequence):
    """
    Pairwise log-log slopes of |exact - expansion| against h.

    Args:
        expansion: HExpansion (evaluated at h) or any callable h -> float
        exact_evaluator: Callable h -> exact value
        h_sequence: At least three strictly decreasing positive h

    Returns:
        list of float, one slope per consecutive pair; an error that behaves
        like C h^p gives slopes close to p.

    Raises:
        ConvergenceError: errors vanish, are not finite, or are not monotone.
    """
    hs, errors = _errors(expansion, exact_evaluator, h_sequence)
    return [
        math.log(e0 / e1) / math.log(h0 / h1)
        for (h0, e0), (h1, e1) in zip(zip(hs, errors), zip(hs[1:], errors[1:]))
    ]


def fitted_order(expansion, exact_evaluator, h_sequence):
    """Least-squares slope of log|error| against log h."""
    hs, errors = _errors(expansion, exact_evaluator, h_sequence)
    slope, _ = np.polyfit(np.log(hs), np.log(errors), 1)
    return float(slope)


def accuracy_by_order(table, exact_evaluator, h_sequence, orders):
    """
    Fitted slope for each truncation of an h-table.

    Args:
        table: HExpansion
        exact_evaluator: Callable h -> exact value
        h_sequence: Strictly decreasing h values
        orders: Iterable of truncation orders (each <= table.order)

    Returns:
        dict order -> fitted slope
    """
    return {
        order: fitted_order(table.truncate(order), exact_evaluator, h_sequence)
        for order in orders
    }
