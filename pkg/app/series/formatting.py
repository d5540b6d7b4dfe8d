"""
app/series/formatting.py
------------------------
Human-readable rendering of expansion tables.

Purpose:
- Recognise coefficients that are short combinations of 1, gamma, gamma^2, pi^2
- Render LogLaurentSeries and HExpansion tables in ascending power order
"""

import math
from fractions import Fraction
from itertools import product

from app.special import EULER_GAMMA

LOG_SYMBOL = "log(1/(1-λ))"
LOG2_SYMBOL = "log²(1/(1-λ))"

_PI2 = math.pi ** 2
_GAMMA2 = EULER_GAMMA ** 2

# Search grid, simplest candidates first
_GAMMA_WEIGHTS = sorted(range(-3, 4), key=abs)
_GAMMA2_WEIGHTS = sorted(range(-2, 3), key=abs)
_PI2_WEIGHTS = [Fraction(0)] + sorted(
    (Fraction(n, 6) for n in range(-12, 13) if n), key=lambda f: (abs(f), f < 0)
)


def _candidates():
    combos = product(_PI2_WEIGHTS, _GAMMA2_WEIGHTS, _GAMMA_WEIGHTS)
    return sorted(combos, key=lambda c: (c[0] != 0, abs(c[1]) + abs(c[2])))


_CANDIDATES = _candidates()


def _signed_term(weight, symbol):
    """Return (sign, text) for weight * symbol with weight a nonzero Fraction."""
    sign = "-" if weight < 0 else "+"
    weight = abs(weight)
    if not symbol:
        return sign, str(weight)
    num, den = weight.numerator, weight.denominator
    text = symbol if num == 1 else f"{num}{symbol}"
    if den != 1:
        text += f"/{den}"
    return sign, text


def _join(pieces):
    if not pieces:
        return "0"
    sign, text = pieces[0]
    out = ("-" if sign == "-" else "") + text
    for sign, text in pieces[1:]:
        out += f" {sign} {text}"
    return out


def closed_form(value, max_den=48, rel_tol=1e-10):
    """
    Recognise value as d*pi^2 + b*gamma^2 + a*gamma + r with small rationals.

    Args:
        value: float to recognise
        max_den: Largest denominator accepted for the rational part
        rel_tol: Match tolerance relative to max(1, |value|)

    Returns:
        str or None: e.g. 'π²/3', 'γ - 1', '-γ² - γ - 1'; None when nothing matches.
    """
    scale = max(1.0, abs(value))
    for d, b, a in _CANDIDATES:
        rest = value - float(d) * _PI2 - b * _GAMMA2 - a * EULER_GAMMA
        r = Fraction(rest).limit_denominator(max_den)
        if abs(float(r) - rest) > rel_tol * scale:
            continue
        pieces = []
        for weight, symbol in ((d, "π²"), (Fraction(b), "γ²"), (Fraction(a), "γ"), (r, "")):
            if weight:
                pieces.append(_signed_term(weight, symbol))
        return _join(pieces)
    return None


def describe(value):
    """Closed form when recognised, else six significant digits."""
    if value == 0.0:
        return "0"
    return closed_form(value) or f"{value:.6g}"


def _symbol_term(value, symbol):
    """(sign, text) for value * symbol."""
    sign = "-" if value < 0 else "+"
    text = describe(abs(value))
    if text == "1":
        return sign, symbol
    if " " in text:
        return sign, f"({text})·{symbol}"
    return sign, f"{text}·{symbol}"


def _constant_term(value):
    text = describe(value)
    if text.startswith("-"):
        return "-", text[1:]
    return "+", text


def format_log_poly(poly):
    """Render c2 L^2 + c1 L + c0 with recognised constants."""
    padded = poly.padded()
    pieces = []
    for degree, symbol in ((2, LOG2_SYMBOL), (1, LOG_SYMBOL)):
        if padded[degree] != 0.0:
            pieces.append(_symbol_term(padded[degree], symbol))
    if padded[0] != 0.0:
        pieces.append(_constant_term(padded[0]))
    return _join(pieces)


def format_series(series, title=""):
    """Aligned text table of a LogLaurentSeries, one row per power of u."""
    lines = [title] if title else []
    lines.append(f"{'power':<8}coefficient")
    for power, poly in series.coeffs:
        lines.append(f"{'u^' + str(power):<8}{format_log_poly(poly)}")
    lines.append(f"{'':<8}+ O(u^{series.order})")
    return "\n".join(lines)


def format_h_expansion(table, title=""):
    """Aligned text table of an HExpansion, one row per power of h."""
    lines = [title] if title else []
    lines.append(f"{'power':<8}coefficient")
    powers = table.powers()
    if table.log_over_h is not None and -1 not in powers:
        powers = [-1] + powers
    for power in powers:
        pieces = []
        if power == -1 and table.log_over_h is not None:
            pieces.append(_join([_symbol_term(float(table.log_over_h), LOG_SYMBOL)]))
        const = table.constant(power)
        if const is not None:
            pieces.append(str(const))
        exact = table.coefficient(power)
        if exact != 0:
            pieces.append(str(exact))
        text = " + ".join(pieces).replace("+ -", "- ")
        lines.append(f"{'h^' + str(power):<8}{text}")
    if table.finite:
        lines.append(f"{'':<8}(finite: all further terms vanish)")
    else:
        lines.append(f"{'':<8}+ O(h^{table.order})")
    return "\n".join(lines)
