"""
app/simulate/__init__.py
------------------------
Monte Carlo oracle for the maximum queue length of a busy period.
"""

from app.simulate.engine import (
    DEFAULT_STEP_CAP,
    empirical_tail,
    simulate_busy_period,
    simulate_many,
)
from app.simulate.models import EmpiricalSummary, Estimate, RngSeed

__all__ = [
    "DEFAULT_STEP_CAP",
    "EmpiricalSummary",
    "Estimate",
    "RngSeed",
    "empirical_tail",
    "simulate_busy_period",
    "simulate_many",
]
