"""
app/exact/moments.py
--------------------
Moments of L and the comparison integrals I_j.

Purpose:
- Ex[L^k] = ((1 - lam)/lam) sum_{j<k} binom(k, j) (-1)^(k-1-j) S_j(lam)
- Brute-force oracle sum_l l^k Pr[L = l] with an explicit tail bound
- I_j(lam) = integral_1^inf x^j lam^x / (1 - lam^x) dx in closed form
"""

import math
from math import comb, factorial

import numpy as np

from app.errors import ConvergenceError, ParameterError
from app.exact.distribution import pmf_array
from app.exact.lambert import lambert_S_direct
from app.exact.models import Tolerance, TrafficIntensity
from app.special import polylog


def _check_order(k):
    if not isinstance(k, int) or k < 1:
        raise ParameterError(f"moment order k must be an integer >= 1, got {k!r}")


def moment(k, lam, tol=None):
    """
    Ex[L^k] through the Lambert sums S_0 .. S_{k-1}.

    Args:
        k: Moment order, >= 1
        lam: TrafficIntensity or float, 0 < lambda < 1
        tol: Tolerance or float for each Lambert sum

    Returns:
        float (>= 1)

    Raises:
        ParameterError: lambda >= 1, where Ex[L] already diverges.
    """
    _check_order(k)
    intensity = TrafficIntensity.coerce(lam).require_stable()
    tol = Tolerance.coerce(tol)
    parts = [
        comb(k, j) * (-1) ** (k - 1 - j) * lambert_S_direct(j, intensity, tol)
        for j in range(k)
    ]
    return intensity.u / intensity.lam * math.fsum(parts)


def _log_tail_bound(k, intensity, l_max):
    """log of (1 - lam) lam^l_max (l_max + k)^k / (1 - lam)^2."""
    return -intensity.h * l_max + k * math.log(l_max + k) - math.log(intensity.u)


def required_l_max(k, lam, precision=1e-13):
    """Smallest l_max whose brute-force tail bound is below precision."""
    _check_order(k)
    intensity = TrafficIntensity.coerce(lam).require_stable()
    target = math.log(precision)

    hi = 16
    while _log_tail_bound(k, intensity, hi) >= target:
        hi *= 2
        if hi > 1 << 40:
            raise ConvergenceError("no feasible l_max for the brute-force tail bound")
    lo = hi // 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _log_tail_bound(k, intensity, mid) < target:
            hi = mid
        else:
            lo = mid
    return hi


def brute_force_moment(k, lam, l_max=None, precision=1e-13):
    """
    Ex[L^k] = sum_{l=1}^{l_max} l^k Pr[L = l].

    Args:
        k: Moment order, >= 1
        lam: TrafficIntensity or float, 0 < lambda < 1
        l_max: Summation horizon; defaults to required_l_max(k, lam, precision)
        precision: Required bound on the omitted tail

    Raises:
        ConvergenceError: the tail bound at l_max is not below precision.
    """
    _check_order(k)
    intensity = TrafficIntensity.coerce(lam).require_stable()
    if l_max is None:
        l_max = required_l_max(k, intensity, precision)
    if l_max < 1:
        raise ParameterError(f"l_max must be >= 1, got {l_max}")
    if _log_tail_bound(k, intensity, l_max) >= math.log(precision):
        raise ConvergenceError(
            f"l_max={l_max} leaves a tail bound above {precision:g} at lambda={intensity.lam}"
        )
    ls = np.arange(1, l_max + 1, dtype=np.float64)
    return math.fsum(ls ** k * pmf_array(intensity, ls))


def variance(lam, tol=None):
    """Var[L] = Ex[L^2] - Ex[L]^2 from the Lambert route."""
    first = moment(1, lam, tol)
    return moment(2, lam, tol) - first * first


def integral_I(j, lam):
    """
    I_j(lam) = integral_1^inf x^j lam^x / (1 - lam^x) dx.

    j = 0: log(1/(1 - lam)) / h
    j >= 1: sum_{i<=j} binom(j, i) i! Li_{i+1}(lam) / h^(i+1)
    with h = -log(lam).
    """
    if not isinstance(j, int) or j < 0:
        raise ParameterError(f"j must be an integer >= 0, got {j!r}")
    intensity = TrafficIntensity.coerce(lam).require_stable()
    h = intensity.h
    if j == 0:
        return intensity.log_inv_u / h
    return math.fsum(
        comb(j, i) * factorial(i) * polylog(i + 1, intensity.lam) / h ** (i + 1)
        for i in range(j + 1)
    )
