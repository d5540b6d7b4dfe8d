"""
app/special/__init__.py
-----------------------
Exact special numbers and floating-point special functions.
"""

from app.special.functions import EULER_GAMMA, euler_gamma, polylog, zeta
from app.special.numbers import (
    MAX_INDEX,
    bernoulli_number,
    bernoulli_numbers,
    bernoulli_polynomial,
    cauchy_number,
    cauchy_numbers,
)
from app.special.summation import sum_until_tail

__all__ = [
    "EULER_GAMMA",
    "MAX_INDEX",
    "bernoulli_number",
    "bernoulli_numbers",
    "bernoulli_polynomial",
    "cauchy_number",
    "cauchy_numbers",
    "euler_gamma",
    "polylog",
    "sum_until_tail",
    "zeta",
]
