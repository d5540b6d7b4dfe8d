"""
app/exact/distribution.py
-------------------------
Distribution of the maximum queue length L over an M/M/1 busy period.

Purpose:
- Tail Pr[L > l] = (1 - lam) lam^l / (1 - lam^(l+1)), and 1/(l+1) at lam = 1
- Point probabilities Pr[L = l]
- Gambler's-ruin probability, whose (p = lam/(1+lam), v = 1, w = l) case is the tail
- Equilibrium mean queue length, for contrast with Ex[L]

Powers of lambda are taken as exp(-h n) and 1 - lam^n as -expm1(-h n),
with h = -log1p(-u), so the formulas stay accurate as lambda -> 1.
"""

import math
from fractions import Fraction

import numpy as np

from app.errors import ParameterError
from app.exact.models import TrafficIntensity


def _check_count(name, value, minimum):
    if not isinstance(value, (int, np.integer)) or value < minimum:
        raise ParameterError(f"{name} must be an integer >= {minimum}, got {value!r}")
    return int(value)


def tail_probability(lam, l):
    """
    Pr[L > l].

    Args:
        lam: TrafficIntensity or float, 0 < lambda <= 1
        l: Nonnegative integer

    Returns:
        float in [0, 1], strictly decreasing in l

    Raises:
        ParameterError: lambda > 1 (no proper distribution) or l < 0.
    """
    intensity = TrafficIntensity.coerce(lam).require_proper()
    l = _check_count("l", l, 0)
    if l == 0:
        return 1.0
    if intensity.u == 0.0:
        return 1.0 / (l + 1)
    h = intensity.h
    return intensity.u * math.exp(-h * l) / -math.expm1(-h * (l + 1))


def tail_probability_exact(lam, l):
    """
    Pr[L > l] in exact arithmetic for rational 0 < lambda <= 1.

    Returns:
        Fraction
    """
    lam = Fraction(lam)
    if not 0 < lam <= 1:
        raise ParameterError(f"exact tail needs 0 < lambda <= 1, got {lam}")
    l = _check_count("l", l, 0)
    if lam == 1:
        return Fraction(1, l + 1)
    return (1 - lam) * lam ** l / (1 - lam ** (l + 1))


def pmf(lam, l):
    """
    Pr[L = l] = Pr[L > l-1] - Pr[L > l].

    Evaluated as u^2 lam^(l-1) / ((1 - lam^l)(1 - lam^(l+1))), which is the same
    difference without cancellation; at lambda = 1 it is 1/(l(l+1)).

    Raises:
        ParameterError: l < 1 (a busy period always reaches L >= 1).
    """
    intensity = TrafficIntensity.coerce(lam).require_proper()
    l = _check_count("l", l, 1)
    if intensity.u == 0.0:
        return 1.0 / (l * (l + 1))
    h, u = intensity.h, intensity.u
    return u * u * math.exp(-h * (l - 1)) / (math.expm1(-h * l) * math.expm1(-h * (l + 1)))


def pmf_array(intensity, ls):
    """Vectorised pmf for lambda < 1 over an integer array ls >= 1."""
    ls = np.asarray(ls, dtype=np.float64)
    h, u = intensity.h, intensity.u
    return u * u * np.exp(-h * (ls - 1)) / (np.expm1(-h * ls) * np.expm1(-h * (ls + 1)))


def gamblers_ruin_prob(p, v, w):
    """
    Probability that Q (starting with w) is ruined before P (starting with v).

    Args:
        p: Probability P wins a step, 0 < p < 1
        v: P's initial stake, >= 1
        w: Q's initial stake, >= 1

    Returns:
        float: ((q/p)^v - 1)/((q/p)^(v+w) - 1), or v/(v+w) when p = 1/2
    """
    p = float(p)
    if not 0.0 < p < 1.0:
        raise ParameterError(f"p must lie in (0, 1), got {p!r}")
    v = _check_count("v", v, 1)
    w = _check_count("w", w, 1)
    if p == 0.5:
        return v / (v + w)

    log_ratio = math.log1p(-p) - math.log(p)  # log(q/p)
    if log_ratio < 0.0:
        return math.expm1(v * log_ratio) / math.expm1((v + w) * log_ratio)
    # (q/p) > 1: factor out (q/p)^(v+w) so nothing overflows
    return (
        math.exp(-w * log_ratio)
        * math.expm1(-v * log_ratio)
        / math.expm1(-(v + w) * log_ratio)
    )


def equilibrium_mean(lam):
    """Ex[K] = lambda/(1 - lambda), the time-average queue length."""
    intensity = TrafficIntensity.coerce(lam).require_stable()
    return intensity.lam / intensity.u
