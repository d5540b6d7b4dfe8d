"""
app/exact/models.py
-------------------
Domain types for the exact routes.

Purpose:
- TrafficIntensity: validated lambda, with whichever of lambda or u = 1 - lambda
  the caller supplied kept authoritative for h and log(1/u)
- Tolerance: relative truncation tolerance for infinite sums
"""

import math
from dataclasses import dataclass, field

from app.errors import ParameterError


@dataclass(frozen=True)
class TrafficIntensity:
    """
    Ratio lambda of arrival rate to service rate.

    Attributes:
        lam: lambda > 0
        u: 1 - lambda (negative when lambda > 1)
        h: -log(lambda)
        log_inv_u: log(1/(1 - lambda)), None when lambda >= 1
    """

    lam: float
    u: float
    h: float = field(default=None, compare=False, repr=False)
    log_inv_u: float = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not (math.isfinite(self.lam) and math.isfinite(self.u)):
            raise ParameterError("traffic intensity must be finite")
        if self.lam <= 0.0:
            raise ParameterError(f"traffic intensity must be positive, got lambda={self.lam!r}")
        # Derived values not supplied by a constructor come from u
        if self.h is None:
            object.__setattr__(self, "h", -math.log1p(-self.u))
        if self.log_inv_u is None and self.u > 0.0:
            object.__setattr__(self, "log_inv_u", -math.log(self.u))

    @classmethod
    def from_lambda(cls, lam):
        """Build from lambda; h and log(1/u) are taken from lambda directly."""
        lam = float(lam)
        if not (math.isfinite(lam) and lam > 0.0):
            return cls(lam=lam, u=1.0 - lam)
        return cls(
            lam=lam,
            u=1.0 - lam,
            h=-math.log(lam),
            log_inv_u=-math.log1p(-lam) if lam < 1.0 else None,
        )

    @classmethod
    def from_u(cls, u):
        """Build from u = 1 - lambda; u is kept exactly as given."""
        u = float(u)
        return cls(lam=1.0 - u, u=u)

    @classmethod
    def coerce(cls, value):
        """Accept a TrafficIntensity or a bare lambda."""
        if isinstance(value, cls):
            return value
        return cls.from_lambda(value)

    def require_stable(self):
        """
        Ensure lambda < 1.

        Returns:
            self, for chaining

        Raises:
            ParameterError: lambda >= 1 (busy periods are not a.s. finite
            with finite mean, and the Lambert series diverge).
        """
        if not self.u > 0.0:
            raise ParameterError(
                f"lambda must be < 1 here, got lambda={self.lam!r}; "
                "the sums diverge at lambda >= 1"
            )
        return self

    def require_proper(self):
        """Ensure lambda <= 1, where the distribution of L is proper."""
        if self.u < 0.0:
            raise ParameterError(
                f"lambda={self.lam!r} > 1: the busy period is infinite with positive "
                "probability and L has no proper distribution"
            )
        return self


@dataclass(frozen=True)
class Tolerance:
    """Relative truncation tolerance, 0 < rel_tol < 1."""

    rel_tol: float = 1e-12

    def __post_init__(self):
        if not 0.0 < self.rel_tol < 1.0:
            raise ParameterError(f"tolerance must lie in (0, 1), got {self.rel_tol!r}")

    @classmethod
    def coerce(cls, value):
        if value is None:
            return cls()
        if isinstance(value, cls):
            return value
        return cls(float(value))
