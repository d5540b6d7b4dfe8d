"""
app/series/models.py
--------------------
Value types for truncated expansions near lambda = 1.

Purpose:
- LogPoly: polynomial of degree <= 2 in L = log(1/(1 - lambda))
- LogLaurentSeries: truncated series in u = 1 - lambda with LogPoly coefficients
- SymbolicConstant: exact tag for rational, j! zeta(j+1) and gamma constants
- HExpansion: exact-coefficient expansion in powers of h = -log(lambda)

All types are frozen; arithmetic lives in app/series/arithmetic.py.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from app.errors import LogDegreeOverflow, ParameterError
from app.special import EULER_GAMMA, zeta

# Highest power of L a coefficient may carry
MAX_LOG_DEGREE = 2


@dataclass(frozen=True)
class LogPoly:
    """
    c0 + c1 L + c2 L^2 with trailing zeros trimmed.

    Attributes:
        coeffs: Tuple of floats, entry d multiplies L^d
    """

    coeffs: tuple = ()

    def __post_init__(self):
        values = [float(c) for c in self.coeffs]
        while values and values[-1] == 0.0:
            values.pop()
        if len(values) - 1 > MAX_LOG_DEGREE:
            raise LogDegreeOverflow(
                f"coefficient of degree {len(values) - 1} in log(1/(1-lambda)) "
                f"exceeds the cap of {MAX_LOG_DEGREE}"
            )
        if not all(math.isfinite(c) for c in values):
            raise ParameterError("LogPoly coefficients must be finite")
        object.__setattr__(self, "coeffs", tuple(values))

    @classmethod
    def of(cls, *coeffs):
        return cls(tuple(coeffs))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def padded(self):
        """Coefficients as a list of exactly MAX_LOG_DEGREE + 1 floats."""
        return list(self.coeffs) + [0.0] * (MAX_LOG_DEGREE + 1 - len(self.coeffs))

    def __add__(self, other):
        a, b = self.padded(), other.padded()
        return LogPoly(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self):
        return LogPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LogPoly):
            if self.is_zero() or other.is_zero():
                return LogPoly()
            if self.degree + other.degree > MAX_LOG_DEGREE:
                raise LogDegreeOverflow(
                    f"product has degree {self.degree + other.degree} in "
                    f"log(1/(1-lambda)); the cap is {MAX_LOG_DEGREE}"
                )
            out = [0.0] * (self.degree + other.degree + 1)
            for i, x in enumerate(self.coeffs):
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
            return LogPoly(tuple(out))
        scalar = float(other)
        return LogPoly(tuple(c * scalar for c in self.coeffs))

    __rmul__ = __mul__

    def __call__(self, log_value):
        value = 0.0
        for c in reversed(self.coeffs):
            value = value * log_value + c
        return value


@dataclass(frozen=True)
class LogLaurentSeries:
    """
    sum_{n_min <= n < order} coeffs[n](L) u^n + O(u^order).

    Attributes:
        n_min: Lowest power of u the series may carry
        order: First omitted power of u
        coeffs: Sorted tuple of (power, LogPoly) pairs, zero coefficients omitted
    """

    n_min: int
    order: int
    coeffs: tuple = ()

    def __post_init__(self):
        if self.n_min > self.order:
            raise ParameterError(f"n_min={self.n_min} exceeds order={self.order}")
        for power, _ in self.coeffs:
            if not self.n_min <= power < self.order:
                raise ParameterError(
                    f"power {power} outside [{self.n_min}, {self.order})"
                )

    @classmethod
    def from_terms(cls, n_min, order, terms):
        """
        Build a series from a mapping power -> LogPoly (or float).

        Powers at or above `order` are dropped; zero coefficients are omitted.
        """
        kept = {}
        for power, poly in dict(terms).items():
            if power >= order:
                continue
            if not isinstance(poly, LogPoly):
                poly = LogPoly.of(poly)
            if poly.is_zero():
                continue
            kept[int(power)] = poly
        return cls(int(n_min), int(order), tuple(sorted(kept.items())))

    @property
    def terms(self):
        return dict(self.coeffs)

    def coefficient(self, power):
        return self.terms.get(power, LogPoly())

    def truncate(self, order):
        """Drop powers >= order; never loosens the existing order."""
        order = min(order, self.order)
        return LogLaurentSeries.from_terms(min(self.n_min, order), order, self.terms)

    def to_json(self):
        return {
            "n_min": self.n_min,
            "order": self.order,
            "terms": [
                {"power": power, "log_coeffs": poly.padded()}
                for power, poly in self.coeffs
            ],
        }

    @classmethod
    def from_json(cls, payload):
        terms = {
            int(item["power"]): LogPoly(tuple(item["log_coeffs"]))
            for item in payload["terms"]
        }
        return cls.from_terms(payload["n_min"], payload["order"], terms)


@dataclass(frozen=True)
class SymbolicConstant:
    """
    An exact constant kept symbolic until evaluation.

    kind:
        'rational'       -> scale
        'factorial_zeta' -> scale * arg! * zeta(arg + 1)
        'gamma'          -> scale * gamma
    """

    kind: str
    arg: int = 0
    scale: Fraction = Fraction(1)

    KINDS = ("rational", "factorial_zeta", "gamma")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ParameterError(f"unknown constant kind {self.kind!r}")
        if self.kind == "factorial_zeta" and self.arg < 1:
            raise ParameterError("factorial_zeta needs arg >= 1")
        object.__setattr__(self, "scale", Fraction(self.scale))

    @classmethod
    def rational(cls, value):
        return cls("rational", 0, Fraction(value))

    @classmethod
    def factorial_zeta(cls, j):
        return cls("factorial_zeta", j)

    @classmethod
    def gamma(cls):
        return cls("gamma")

    def scaled(self, factor):
        return SymbolicConstant(self.kind, self.arg, self.scale * Fraction(factor))

    def value(self):
        if self.kind == "rational":
            return float(self.scale)
        if self.kind == "gamma":
            return float(self.scale) * EULER_GAMMA
        return float(self.scale * factorial(self.arg)) * zeta(self.arg + 1)

    def __str__(self):
        if self.kind == "rational":
            return str(self.scale)
        if self.kind == "gamma":
            symbol = "γ"
            weight = self.scale
        else:
            symbol = f"ζ({self.arg + 1})"
            weight = self.scale * factorial(self.arg)
        if weight == 1:
            return symbol
        if weight == -1:
            return f"-{symbol}"
        return f"{weight}·{symbol}"


@dataclass(frozen=True)
class HExpansion:
    """
    Exact expansion in powers of h, truncated below h^order.

        log_over_h * log(1/(1-lambda)) / h
        + sum_p constants[p] h^p + sum_p coeffs[p] h^p + O(h^order)

    Attributes:
        n_min: Lowest power of h
        order: First omitted power of h
        coeffs: Sorted tuple of (power, Fraction), zeros omitted
        constants: Sorted tuple of (power, SymbolicConstant)
        log_over_h: Fraction multiplying log(1/(1-lambda))/h, or None
        finite: True when every omitted coefficient is known to vanish
    """

    n_min: int
    order: int
    coeffs: tuple = ()
    constants: tuple = ()
    log_over_h: Fraction = None
    finite: bool = False
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.n_min > self.order:
            raise ParameterError(f"n_min={self.n_min} exceeds order={self.order}")
        if self.log_over_h is not None and self.n_min != -1:
            raise ParameterError("the log(1/(1-lambda))/h term requires n_min = -1")
        for power, _ in self.coeffs + self.constants:
            if not self.n_min <= power < self.order:
                raise ParameterError(f"power {power} outside [{self.n_min}, {self.order})")

    @classmethod
    def from_terms(cls, n_min, order, coeffs, constants=None, log_over_h=None,
                   finite=False, label=""):
        kept = {
            int(p): Fraction(c) for p, c in dict(coeffs).items()
            if p < order and Fraction(c) != 0
        }
        consts = {
            int(p): c for p, c in dict(constants or {}).items()
            if p < order and c.scale != 0
        }
        return cls(
            n_min=int(n_min),
            order=int(order),
            coeffs=tuple(sorted(kept.items())),
            constants=tuple(sorted(consts.items())),
            log_over_h=None if log_over_h is None else Fraction(log_over_h),
            finite=finite,
            label=label,
        )

    def coefficient(self, power):
        return dict(self.coeffs).get(power, Fraction(0))

    def constant(self, power):
        return dict(self.constants).get(power)

    def powers(self):
        return sorted(set(dict(self.coeffs)) | set(dict(self.constants)))

    def truncate(self, order):
        """Keep powers below order; a finite table stays finite only if nothing was cut."""
        order = min(order, self.order)
        cut = any(p >= order for p in self.powers())
        return HExpansion.from_terms(
            min(self.n_min, order), order, dict(self.coeffs), dict(self.constants),
            self.log_over_h, self.finite and not cut, self.label,
        )

    def shift(self, power):
        """Multiply by h^power."""
        if self.log_over_h is not None and power != 0:
            raise ParameterError("cannot shift a table carrying the log term")
        return HExpansion.from_terms(
            self.n_min + power, self.order + power,
            {p + power: c for p, c in self.coeffs},
            {p + power: c for p, c in self.constants},
            self.log_over_h, self.finite, self.label,
        )

    def evaluate(self, h):
        """Value of the truncated table at h > 0 (lambda = exp(-h))."""
        h = float(h)
        if h <= 0.0:
            raise ParameterError(f"h must be positive, got {h!r}")
        parts = [float(c) * h ** p for p, c in self.coeffs]
        parts += [c.value() * h ** p for p, c in self.constants]
        if self.log_over_h is not None:
            log_inv_u = -math.log(-math.expm1(-h))
            parts.append(float(self.log_over_h) * log_inv_u / h)
        return math.fsum(parts)

    def to_json(self):
        rows = []
        for power in self.powers():
            exact = self.coefficient(power)
            const = self.constant(power)
            value = float(exact) + (const.value() if const else 0.0)
            rows.append({
                "power": power,
                "rational": str(exact),
                "symbol": str(const) if const else None,
                "value": value,
            })
        return {
            "label": self.label,
            "n_min": self.n_min,
            "order": self.order,
            "finite": self.finite,
            "log_over_h": None if self.log_over_h is None else str(self.log_over_h),
            "terms": rows,
        }
