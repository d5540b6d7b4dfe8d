"""
tests/test_special.py
---------------------
Tests for Bernoulli/Cauchy numbers, zeta, polylog and Euler's constant.
"""

import math
from fractions import Fraction
from math import factorial

import numpy as np
import pytest
from scipy.special import zeta as scipy_zeta

from app.errors import ConvergenceError, ParameterError
from app.special import (
    EULER_GAMMA,
    bernoulli_number,
    bernoulli_numbers,
    bernoulli_polynomial,
    cauchy_number,
    cauchy_numbers,
    euler_gamma,
    polylog,
    sum_until_tail,
    zeta,
)


# ---------------------------------------------------------------- Bernoulli

@pytest.mark.parametrize("n, expected", [
    (0, Fraction(1)),
    (1, Fraction(-1, 2)),
    (2, Fraction(1, 6)),
    (3, Fraction(0)),
    (4, Fraction(-1, 30)),
    (12, Fraction(-691, 2730)),
])
def test_bernoulli_known_values(n, expected):
    assert bernoulli_number(n) == expected


def test_bernoulli_odd_vanish():
    assert all(bernoulli_number(n) == 0 for n in range(3, 62, 2))


def test_bernoulli_even_signs_alternate():
    for n in range(2, 61, 2):
        expected = 1 if (n // 2) % 2 == 1 else -1
        assert (bernoulli_number(n) > 0) == (expected > 0), n


def test_bernoulli_generating_function():
    """(sum B_k t^k/k!) * ((e^t - 1)/t) = 1 + O(t^20), exactly."""
    b = bernoulli_numbers(20)
    for n in range(20):
        coeff = sum(b[k] / factorial(k) * Fraction(1, factorial(n - k + 1)) for k in range(n + 1))
        assert coeff == (1 if n == 0 else 0)


def test_bernoulli_index_cap():
    bernoulli_number(128)
    with pytest.raises(ParameterError):
        bernoulli_number(129)
    with pytest.raises(ParameterError):
        bernoulli_number(-1)


def test_bernoulli_polynomial_values():
    assert bernoulli_polynomial(0, 0.7) == 1.0
    assert bernoulli_polynomial(1, 0.5) == 0.0
    for n in range(12):
        assert bernoulli_polynomial(n, Fraction(0)) == bernoulli_number(n)


def test_bernoulli_polynomial_difference_property():
    """B_n(y + 1) - B_n(y) = n y^(n-1) in exact arithmetic."""
    y = Fraction(3, 7)
    for n in range(1, 15):
        assert bernoulli_polynomial(n, y + 1) - bernoulli_polynomial(n, y) == n * y ** (n - 1)


def test_bernoulli_polynomial_float_matches_exact():
    exact = bernoulli_polynomial(6, Fraction(1, 4))
    assert bernoulli_polynomial(6, 0.25) == pytest.approx(float(exact), rel=1e-13)


# ---------------------------------------------------------------- Cauchy

@pytest.mark.parametrize("n, expected", [
    (0, Fraction(1)),
    (1, Fraction(1, 2)),
    (2, Fraction(-1, 6)),
    (3, Fraction(1, 4)),
    (4, Fraction(-19, 30)),
])
def test_cauchy_known_values(n, expected):
    assert cauchy_number(n) == expected


def test_cauchy_generating_function():
    """(sum C_k t^k/k!) * (log(1+t)/t) = 1 + O(t^20), exactly."""
    c = cauchy_numbers(20)
    for n in range(20):
        coeff = sum(
            c[k] / factorial(k) * Fraction((-1) ** (n - k), n - k + 1) for k in range(n + 1)
        )
        assert coeff == (1 if n == 0 else 0)


def test_cauchy_index_cap():
    with pytest.raises(ParameterError):
        cauchy_number(200)


# ---------------------------------------------------------------- zeta

def test_zeta_two_and_four():
    assert zeta(2) == pytest.approx(math.pi ** 2 / 6, rel=1e-14)
    assert zeta(4) == pytest.approx(math.pi ** 4 / 90, rel=1e-14)


def test_zeta_large_argument():
    assert zeta(40) == pytest.approx(1.0 + 2.0 ** -40 + 3.0 ** -40, rel=1e-15)


@pytest.mark.parametrize("k", range(2, 31))
def test_zeta_matches_scipy(k):
    assert zeta(k) == pytest.approx(float(scipy_zeta(k, 1)), rel=1e-13)


@pytest.mark.parametrize("k", [1, 0, -3, 2.5])
def test_zeta_rejects_bad_argument(k):
    with pytest.raises(ParameterError):
        zeta(k)


# ---------------------------------------------------------------- polylog

def test_polylog_at_zero():
    for k in (1, 2, 5):
        assert polylog(k, 0.0) == 0.0


def test_polylog_order_one_closed_form():
    assert polylog(1, 0.5) == pytest.approx(math.log(2.0), rel=1e-15)


def test_polylog_direct_sum():
    direct = math.fsum(0.5 ** n / n ** 2 for n in range(1, 61))
    assert polylog(2, 0.5) == pytest.approx(direct, rel=1e-12)
    assert polylog(2, 0.5) == pytest.approx(math.pi ** 2 / 12 - math.log(2) ** 2 / 2, rel=1e-12)


@pytest.mark.parametrize("lam", [0.9, 0.99, 0.999])
def test_polylog_dilog_reflection(lam):
    """Li_2(x) + Li_2(1 - x) = pi^2/6 - log(x) log(1 - x)."""
    total = polylog(2, lam) + polylog(2, 1.0 - lam)
    expected = math.pi ** 2 / 6 - math.log(lam) * math.log1p(-lam)
    assert total == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_polylog_approaches_zeta(k):
    gaps = [abs(polylog(k, lam) - zeta(k)) for lam in (0.9, 0.99, 0.999)]
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] < 0.01


@pytest.mark.parametrize("lam", [1.0, 1.5, -0.1])
def test_polylog_rejects_out_of_range(lam):
    with pytest.raises(ParameterError):
        polylog(2, lam)


# ---------------------------------------------------------------- gamma

def test_euler_gamma_constant():
    assert euler_gamma() == EULER_GAMMA
    assert 0.577215 < euler_gamma() < 0.577216


def test_euler_gamma_harmonic_extrapolation():
    n = 1000
    harmonic = math.fsum(1.0 / i for i in range(1, n + 1))
    estimate = harmonic - math.log(n) - 1.0 / (2 * n) + 1.0 / (12 * n ** 2)
    assert abs(estimate - euler_gamma()) < 1e-12


# ---------------------------------------------------------------- summation

def test_sum_until_tail_geometric():
    total, last = sum_until_tail(
        lambda n: 0.5 ** n, lambda m: 0.5 ** m, rel_tol=1e-15, first_chunk=8,
    )
    assert total == pytest.approx(1.0, rel=1e-15)
    assert last >= 50


def test_sum_until_tail_gives_up():
    with pytest.raises(ConvergenceError):
        sum_until_tail(lambda n: 1.0 / n, lambda m: np.inf, rel_tol=1e-12,
                       first_chunk=16, max_terms=1000)
