"""
app/exact/__init__.py
---------------------
Exact (non-asymptotic) quantities for the maximum queue length L.
"""

from app.exact.distribution import (
    equilibrium_mean,
    gamblers_ruin_prob,
    pmf,
    tail_probability,
    tail_probability_exact,
)
from app.exact.lambert import (
    backward_difference,
    lambert_S_direct,
    lambert_S_divisor,
    q_digamma,
    sigma_k_sieve,
)
from app.exact.models import Tolerance, TrafficIntensity
from app.exact.moments import (
    brute_force_moment,
    integral_I,
    moment,
    required_l_max,
    variance,
)

__all__ = [
    "Tolerance",
    "TrafficIntensity",
    "backward_difference",
    "brute_force_moment",
    "equilibrium_mean",
    "gamblers_ruin_prob",
    "integral_I",
    "lambert_S_direct",
    "lambert_S_divisor",
    "moment",
    "pmf",
    "q_digamma",
    "required_l_max",
    "sigma_k_sieve",
    "tail_probability",
    "tail_probability_exact",
    "variance",
]
