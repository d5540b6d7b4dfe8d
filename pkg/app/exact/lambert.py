"""
app/exact/lambert.py
--------------------
Lambert series S_k(lam) = sum_{m>=1} m^k lam^m / (1 - lam^m), by two routes.

Purpose:
- Direct summation over m
- Divisor-sum route sum_n sigma_k(n) lam^n, with a sieve for sigma_k
- Backward differences m^k - (m-1)^k used to combine S_j into moments
- q-digamma at x, whose value at x = 1 encodes S_0

The routes share no code beyond the summation driver, so agreement between
them is an independent check.
"""

import math
from math import comb

import numpy as np

from app.errors import ConvergenceError, ParameterError
from app.exact.models import Tolerance, TrafficIntensity
from app.special import sum_until_tail

# sigma_k tables stay in int64 while n_max^(k+1) is below this
_INT64_BUDGET = 2 ** 62
_MAX_SIEVE = 1 << 26


def backward_difference(k, m):
    """
    Delta_k(m) = m^k - (m-1)^k.

    The binomial form sum_{j<k} binom(k, j) (-1)^(k-1-j) m^j is asserted equal
    (assertions are stripped under python -O).
    """
    if k < 1 or m < 1:
        raise ParameterError(f"backward_difference needs k, m >= 1, got k={k}, m={m}")
    value = m ** k - (m - 1) ** k
    assert value == sum(comb(k, j) * (-1) ** (k - 1 - j) * m ** j for j in range(k))
    return value


def sigma_k_sieve(k, n_max, exact=False):
    """
    Divisor power sums sigma_k(n) for 0 <= n <= n_max (entry 0 is 0).

    Args:
        k: Power, >= 0
        n_max: Table size, >= 1
        exact: Use Python integers instead of int64

    Returns:
        tuple of int

    Raises:
        ParameterError: int64 would overflow and exact is False.
    """
    if k < 0 or n_max < 1:
        raise ParameterError(f"sigma_k_sieve needs k >= 0 and n_max >= 1, got k={k}, n_max={n_max}")
    if not exact and n_max ** (k + 1) >= _INT64_BUDGET:
        raise ParameterError(
            f"sigma_{k} up to {n_max} exceeds 64-bit integers; pass exact=True"
        )
    table = np.zeros(n_max + 1, dtype=object if exact else np.int64)
    for d in range(1, n_max + 1):
        table[d::d] += d ** k
    return tuple(int(x) for x in table)


def _power_tail(log_first, ratio):
    """Geometric bound first/(1 - ratio) from the log of the first omitted term."""
    if ratio >= 1.0 or log_first > 700.0:
        return math.inf
    return math.exp(log_first) / (1.0 - ratio)


def lambert_S_direct(k, lam, tol=None):
    """
    S_k(lam) by direct summation over m.

    Stops when the tail bound t_{M+1} / (1 - r), with
    t_m = m^k lam^m/(1 - lam^m) and r = ((M+2)/(M+1))^k lam, drops below
    rel_tol times the partial sum. Near lambda = 1 this takes ~ 40/(1 - lam)
    terms.

    Args:
        k: Power, >= 0
        lam: TrafficIntensity or float, 0 < lambda < 1
        tol: Tolerance or float (default 1e-12)

    Returns:
        float
    """
    if k < 0:
        raise ParameterError(f"k must be >= 0, got {k}")
    intensity = TrafficIntensity.coerce(lam).require_stable()
    rel_tol = Tolerance.coerce(tol).rel_tol
    h = intensity.h

    def terms(m):
        return m ** k * np.exp(-h * m) / -np.expm1(-h * m)

    def tail_bound(last):
        nxt = last + 1
        log_first = k * math.log(nxt) - h * nxt - math.log(-math.expm1(-h * nxt))
        ratio = ((nxt + 1) / nxt) ** k * math.exp(-h)
        return _power_tail(log_first, ratio)

    total, _ = sum_until_tail(terms, tail_bound, rel_tol)
    return total


def _divisor_cutoff(k, h, target):
    """Smallest power-of-two N with sum_{n>N} n^(k+1) lam^n below target."""
    n = 64
    while True:
        nxt = n + 1
        log_first = (k + 1) * math.log(nxt) - h * nxt
        ratio = ((nxt + 1) / nxt) ** (k + 1) * math.exp(-h)
        if _power_tail(log_first, ratio) <= target:
            return n
        if n >= _MAX_SIEVE:
            raise ConvergenceError(
                f"divisor route would need a sieve beyond {_MAX_SIEVE} entries"
            )
        n *= 2


def lambert_S_divisor(k, lam, tol=None):
    """
    S_k(lam) as sum_n sigma_k(n) lam^n.

    The cut-off N uses sigma_k(n) <= n^(k+1) and the partial-sum floor
    S_k >= lam, so it is conservative.
    """
    if k < 0:
        raise ParameterError(f"k must be >= 0, got {k}")
    intensity = TrafficIntensity.coerce(lam).require_stable()
    rel_tol = Tolerance.coerce(tol).rel_tol
    h = intensity.h

    n_max = _divisor_cutoff(k, h, rel_tol * intensity.lam)
    exact = n_max ** (k + 1) >= _INT64_BUDGET
    sigma = np.array(sigma_k_sieve(k, n_max, exact=exact)[1:], dtype=np.float64)
    n = np.arange(1, n_max + 1, dtype=np.float64)
    return float(np.sum(sigma * np.exp(-h * n)))


def q_digamma(q, x, tol=None):
    """
    psi_q(x) = -log(1 - q) + log(q) * sum_{n>=0} q^(n+x) / (1 - q^(n+x)).

    Args:
        q: 0 < q < 1
        x: x > 0
        tol: Tolerance or float for the series

    Returns:
        float
    """
    q = float(q)
    x = float(x)
    if not 0.0 < q < 1.0:
        raise ParameterError(f"q must lie in (0, 1), got {q!r}")
    if not x > 0.0:
        raise ParameterError(f"x must be positive, got {x!r}")
    rel_tol = Tolerance.coerce(tol).rel_tol
    log_q = math.log(q)

    def terms(n):
        e = (n + x) * log_q
        return np.exp(e) / -np.expm1(e)

    def tail_bound(last):
        e = (last + 1 + x) * log_q
        return math.exp(e) / (-math.expm1(e) * -math.expm1(log_q))

    series, _ = sum_until_tail(terms, tail_bound, rel_tol, start=0)
    return -math.log1p(-q) + log_q * series
