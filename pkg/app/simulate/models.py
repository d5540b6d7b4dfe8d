"""
app/simulate/models.py
----------------------
Seeds and summaries for the busy-period simulator.

Purpose:
- RngSeed: 64-bit seed and the per-partition counter-based generators
- EmpiricalSummary: histogram of L with exact integer moment sums
- Estimate: value with its normal-approximation standard error
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from app.errors import ParameterError


class Estimate(NamedTuple):
    value: float
    stderr: float


@dataclass(frozen=True)
class RngSeed:
    """Seed in [0, 2^64); equal seeds give bit-identical streams."""

    seed: int = 0

    def __post_init__(self):
        if not isinstance(self.seed, (int, np.integer)) or not 0 <= self.seed < 2 ** 64:
            raise ParameterError(f"seed must be an integer in [0, 2^64), got {self.seed!r}")

    @classmethod
    def coerce(cls, value):
        if isinstance(value, cls):
            return value
        return cls(int(value))

    def generator(self, stream):
        """Philox generator for one stream, keyed on (seed, stream)."""
        sequence = np.random.SeedSequence(int(self.seed), spawn_key=(int(stream),))
        return np.random.Generator(np.random.Philox(sequence))


@dataclass(frozen=True)
class EmpiricalSummary:
    """
    Monte Carlo summary of simulated busy periods.

    Attributes:
        n: Number of busy periods
        histogram: Sorted tuple of (l, count) with count > 0
        moment_sums: Exact sums of L, L^2, L^3, L^4
        max_observed: Largest L seen
        lam: Traffic intensity simulated (optional metadata)
        seed: Seed used (optional metadata; None after merging different seeds)
    """

    n: int
    histogram: tuple
    moment_sums: tuple
    max_observed: int
    lam: float = None
    seed: int = None

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError("a summary needs at least one busy period")
        if sum(c for _, c in self.histogram) != self.n:
            raise ParameterError("histogram counts do not add up to n")
        if any(c < 0 for _, c in self.histogram):
            raise ParameterError("histogram counts must be nonnegative")
        if self.moment_sums != _moment_sums(self.histogram):
            raise ParameterError("moment sums are inconsistent with the histogram")

    @classmethod
    def from_counts(cls, counts, lam=None, seed=None):
        """Build from a mapping l -> count."""
        histogram = tuple(sorted((int(l), int(c)) for l, c in dict(counts).items() if c))
        n = sum(c for _, c in histogram)
        return cls(
            n=n,
            histogram=histogram,
            moment_sums=_moment_sums(histogram),
            max_observed=max((l for l, _ in histogram), default=0),
            lam=lam,
            seed=seed,
        )

    @classmethod
    def from_maxima(cls, maxima, lam=None, seed=None):
        counts = np.bincount(np.asarray(maxima, dtype=np.int64))
        return cls.from_counts(
            {l: int(c) for l, c in enumerate(counts) if c}, lam=lam, seed=seed
        )

    def merge(self, other):
        """Combine two summaries of the same lambda (counts add)."""
        if self.lam is not None and other.lam is not None and self.lam != other.lam:
            raise ParameterError(f"cannot merge lambda={self.lam} with lambda={other.lam}")
        counts = dict(self.histogram)
        for l, c in other.histogram:
            counts[l] = counts.get(l, 0) + c
        seed = self.seed if self.seed == other.seed else None
        lam = self.lam if self.lam is not None else other.lam
        return EmpiricalSummary.from_counts(counts, lam=lam, seed=seed)

    @property
    def counts(self):
        return dict(self.histogram)

    def moment(self, k):
        """Sample mean of L^k, 1 <= k <= 4."""
        if not 1 <= k <= 4:
            raise ParameterError(f"moment order must be in 1..4, got {k}")
        return self.moment_sums[k - 1] / self.n

    @property
    def mean(self):
        return self.moment(1)

    @property
    def variance(self):
        """Unbiased sample variance of L (nan for n = 1)."""
        if self.n < 2:
            return math.nan
        s1, s2 = self.moment_sums[0], self.moment_sums[1]
        return (s2 - s1 * s1 / self.n) / (self.n - 1)

    def stderr_moment(self, k):
        """Standard error of the sample mean of L^k, k in {1, 2}."""
        if k not in (1, 2):
            raise ParameterError("standard errors need the 2k-th sum; k must be 1 or 2")
        if self.n < 2:
            return math.nan
        sk, s2k = self.moment_sums[k - 1], self.moment_sums[2 * k - 1]
        spread = (s2k - sk * sk / self.n) / (self.n - 1)
        return math.sqrt(max(spread, 0.0) / self.n)

    @property
    def stderr_mean(self):
        return self.stderr_moment(1)

    def to_json(self):
        def clean(x):
            return None if math.isnan(x) else x

        return {
            "n": self.n,
            "lambda": self.lam,
            "seed": self.seed,
            "histogram": [[l, c] for l, c in self.histogram],
            "mean": self.mean,
            "m2": self.moment(2),
            "m3": self.moment(3),
            "m4": self.moment(4),
            "stderr_mean": clean(self.stderr_mean),
        }


def _moment_sums(histogram):
    return tuple(sum(c * l ** k for l, c in histogram) for k in range(1, 5))
