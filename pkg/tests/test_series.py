"""
tests/test_series.py
--------------------
Tests for truncated series in u = 1 - lambda and exact h-tables.
"""

import json
import math
import random
from fractions import Fraction
from math import factorial

import pytest

from app.errors import LogDegreeOverflow, ParameterError
from app.exact import TrafficIntensity
from app.series import (
    HExpansion,
    LogLaurentSeries,
    LogPoly,
    SymbolicConstant,
    closed_form,
    evaluate,
    format_series,
    h_power_series,
    h_series,
    inv_h_power,
    inv_h_series,
    one_series,
    prefactor_series,
    series_add,
    series_mul,
    series_scale,
    series_sub,
    zero_series,
)
from app.special import EULER_GAMMA, cauchy_numbers

LOG = LogPoly.of(0.0, 1.0)


def exact_inv_h_coefficients(order):
    """Exact coefficients (-1)^n C_n / n! of u^(n-1) in 1/h, for n < order."""
    c = cauchy_numbers(order - 1)
    return [Fraction((-1) ** n) * c[n] / factorial(n) for n in range(order)]


def _series(n_min, order, terms):
    return LogLaurentSeries.from_terms(n_min, order, terms)


def _random_series(rng, n_min, order):
    return _series(n_min, order, {
        p: LogPoly.of(rng.uniform(-1, 1), rng.uniform(-1, 1))
        for p in range(n_min, order)
    })


def _close(a, b, tol=1e-12):
    assert a.order == b.order
    powers = set(a.terms) | set(b.terms)
    for p in powers:
        x, y = a.coefficient(p).padded(), b.coefficient(p).padded()
        assert all(abs(s - t) <= tol for s, t in zip(x, y)), p


# ---------------------------------------------------------------- LogPoly

def test_log_poly_trims_trailing_zeros():
    assert LogPoly.of(1.0, 0.0, 0.0).coeffs == (1.0,)
    assert LogPoly.of(0.0, 0.0).is_zero()


def test_log_poly_degree_cap():
    with pytest.raises(LogDegreeOverflow):
        LogPoly.of(0.0, 0.0, 0.0, 1.0)
    with pytest.raises(LogDegreeOverflow):
        LogPoly.of(0.0, 0.0, 1.0) * LOG


def test_log_poly_evaluates():
    assert LogPoly.of(1.0, 2.0, 3.0)(2.0) == 17.0


# ---------------------------------------------------------------- series_add

def test_add_zero_is_identity():
    a = _series(-1, 3, {-1: 1.0, 0: LOG, 2: 0.5})
    assert series_add(a, zero_series(3, n_min=-1)) == a


def test_add_collects_like_terms():
    total = series_add(_series(0, 2, {0: LOG}), _series(0, 2, {0: EULER_GAMMA}))
    assert total.terms == {0: LogPoly.of(EULER_GAMMA, 1.0)}


def test_add_order_and_n_min_rules():
    total = series_add(_series(-2, 5, {-2: 1.0}), _series(0, 3, {0: 1.0}))
    assert (total.n_min, total.order) == (-2, 3)


def test_inv_h_minus_pole_matches_cauchy_coefficients():
    rest = series_add(inv_h_series(3), _series(-1, 10, {-1: -1.0}))
    exact = exact_inv_h_coefficients(3)
    assert rest.order == 2
    assert -1 not in rest.terms
    for n in (1, 2):
        assert rest.coefficient(n - 1).padded()[0] == pytest.approx(float(exact[n]), abs=1e-15)


# ---------------------------------------------------------------- series_mul

def test_mul_one_is_identity():
    a = _series(-1, 3, {-1: 1.0, 0: LOG, 1: 0.25})
    assert series_mul(a, one_series(10)) == a


def test_mul_log_degrees_add():
    square = series_mul(_series(0, 3, {0: LOG}), _series(0, 3, {0: LOG}))
    assert square.coefficient(0) == LogPoly.of(0.0, 0.0, 1.0)


def test_mul_rejects_log_cubed():
    with pytest.raises(LogDegreeOverflow):
        series_mul(_series(0, 2, {0: LogPoly.of(0.0, 0.0, 1.0)}), _series(0, 2, {0: LOG}))


def test_mul_order_rule():
    product = series_mul(_series(-1, 3, {-1: 1.0}), _series(1, 4, {1: 1.0}))
    assert (product.n_min, product.order) == (0, 3)


def test_inv_h_squared_matches_convolution():
    base = inv_h_series(4)
    square = series_mul(base, base)
    exact = exact_inv_h_coefficients(4)
    coeff = {n - 1: exact[n] for n in range(4)}
    assert square.order == 2
    for p in range(-2, 2):
        expected = sum(coeff[i] * coeff[p - i] for i in coeff if p - i in coeff)
        assert square.coefficient(p).padded()[0] == pytest.approx(float(expected), abs=1e-15)


def test_ring_axioms_on_random_series():
    rng = random.Random(7)
    for _ in range(20):
        a, b, c = (_random_series(rng, -1, 3) for _ in range(3))
        a, b, c = (s.truncate(3) for s in (a, b, c))
        # the random series carry L, so keep products to degree 2
        a = _series(a.n_min, a.order, {p: LogPoly.of(q.padded()[0]) for p, q in a.coeffs})
        _close(series_add(a, b), series_add(b, a))
        _close(series_mul(a, b), series_mul(b, a))
        _close(series_add(series_add(a, b), c), series_add(a, series_add(b, c)))
        _close(series_mul(a, series_add(b, c)), series_add(series_mul(a, b), series_mul(a, c)))


def test_sub_and_scale():
    a = _series(0, 3, {0: 1.0, 1: LOG})
    assert series_sub(a, a).coeffs == ()
    assert series_scale(a, 2.0).coefficient(1) == LogPoly.of(0.0, 2.0)


# ---------------------------------------------------------------- 1/h and h

def test_inv_h_low_orders():
    assert inv_h_series(1).terms == {-1: LogPoly.of(1.0)}
    two = inv_h_series(2)
    assert two.terms == {-1: LogPoly.of(1.0), 0: LogPoly.of(-0.5)}
    assert two.order == 1


def test_inv_h_evaluates_near_one():
    assert evaluate(inv_h_series(8), 0.9) == pytest.approx(-1.0 / math.log(0.9), abs=1e-8)
    assert evaluate(inv_h_series(10), 0.99) == pytest.approx(-1.0 / math.log(0.99), abs=1e-10)


def test_inv_h_is_inverse_of_h():
    for n in (4, 8, 12):
        product = series_mul(inv_h_series(n), h_series(n))
        assert product.order == n - 1
        for p in range(-1, n - 1):
            expected = 1.0 if p == 0 else 0.0
            assert product.coefficient(p).padded()[0] == pytest.approx(expected, abs=1e-12)


def test_inv_h_power():
    assert inv_h_power(1, 5) == inv_h_series(5)
    square = inv_h_power(2, 3)
    assert square.coefficient(-2) == LogPoly.of(1.0)
    assert evaluate(square, 0.95) == pytest.approx(1.0 / math.log(1 / 0.95) ** 2, rel=1e-6)
    for p in (1, 2, 3):
        assert inv_h_power(p, 6).coefficient(-p) == LogPoly.of(1.0)


def test_h_power_series_truncates_exactly():
    for power in (-3, -1, 0, 1, 2):
        s = h_power_series(power, 4)
        assert s.order == 4
    lam = 0.97
    h = -math.log(lam)
    assert evaluate(h_power_series(2, 10), lam) == pytest.approx(h ** 2, rel=1e-10)
    assert evaluate(h_power_series(-2, 6), lam) == pytest.approx(h ** -2, rel=1e-9)


def test_prefactor_series():
    assert prefactor_series(2).terms == {1: LogPoly.of(1.0)}
    assert set(prefactor_series(4).terms) == {1, 2, 3}
    assert evaluate(prefactor_series(40), 0.5) == pytest.approx(1.0, abs=1e-11)
    with pytest.raises(ParameterError):
        prefactor_series(1)


# ---------------------------------------------------------------- evaluate

def test_evaluate_zero_series():
    assert evaluate(zero_series(5), 0.3) == 0.0


def test_evaluate_log_coefficient():
    s = _series(0, 1, {0: LogPoly.of(EULER_GAMMA, 1.0)})
    intensity = TrafficIntensity.from_u(math.exp(-1.0))
    assert evaluate(s, intensity) == pytest.approx(1.0 + EULER_GAMMA, rel=1e-15)


def test_evaluate_rejects_unstable():
    with pytest.raises(ParameterError):
        evaluate(one_series(2), 1.0)


def test_truncation_soundness():
    """Combining numerically agrees with the combined series up to C u^order."""
    a, b = inv_h_series(6), h_series(6)
    product = series_mul(a, b)
    ratios = []
    for lam in (0.9, 0.99, 0.999):
        u = 1.0 - lam
        gap = abs(evaluate(a, lam) * evaluate(b, lam) - evaluate(product, lam))
        ratios.append(gap / u ** product.order)
    assert max(ratios) < 10.0


# ---------------------------------------------------------------- JSON

def test_json_round_trip():
    s = _series(-1, 2, {-1: 3.25, 0: LogPoly.of(EULER_GAMMA, -1.0, 0.5), 1: 1e-300})
    payload = json.loads(json.dumps(s.to_json()))
    assert LogLaurentSeries.from_json(payload) == s
    assert payload["terms"][1] == {"power": 0, "log_coeffs": [EULER_GAMMA, -1.0, 0.5]}


# ---------------------------------------------------------------- h-tables

def test_symbolic_constants_render():
    assert str(SymbolicConstant.factorial_zeta(2)) == "2·ζ(3)"
    assert str(SymbolicConstant.factorial_zeta(1)) == "ζ(2)"
    assert str(SymbolicConstant.gamma()) == "γ"
    assert SymbolicConstant.factorial_zeta(1).value() == pytest.approx(math.pi ** 2 / 6, rel=1e-15)


def test_h_expansion_invariants():
    with pytest.raises(ParameterError):
        HExpansion.from_terms(0, 3, {0: 1}, log_over_h=1)
    table = HExpansion.from_terms(-1, 3, {-1: 1, 0: Fraction(1, 2)}, log_over_h=1)
    with pytest.raises(ParameterError):
        table.shift(-1)


def test_h_expansion_truncate_and_evaluate():
    table = HExpansion.from_terms(-2, 2, {-2: 1, 0: Fraction(-1, 2), 1: 3}, finite=True)
    assert table.truncate(2).finite
    cut = table.truncate(1)
    assert not cut.finite and cut.powers() == [-2, 0]
    assert table.evaluate(0.5) == pytest.approx(4.0 - 0.5 + 1.5)
    assert table.shift(-1).powers() == [-3, -1, 0]


# ---------------------------------------------------------------- formatting

@pytest.mark.parametrize("value, text", [
    (math.pi ** 2 / 3, "π²/3"),
    (EULER_GAMMA - 1.0, "γ - 1"),
    (EULER_GAMMA, "γ"),
    (-0.5, "-1/2"),
])
def test_closed_form(value, text):
    assert closed_form(value) == text


def test_format_series_shows_order():
    text = format_series(_series(0, 1, {0: LogPoly.of(EULER_GAMMA, 1.0)}))
    assert "log(1/(1-λ)) + γ" in text
    assert "O(u^1)" in text
