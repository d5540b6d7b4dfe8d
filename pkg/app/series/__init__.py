"""
app/series/__init__.py
----------------------
Truncated series in u = 1 - lambda with log-polynomial coefficients, and
exact expansions in h = -log(lambda).
"""

from app.series.arithmetic import (
    evaluate,
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
from app.series.formatting import closed_form, format_h_expansion, format_series
from app.series.models import (
    MAX_LOG_DEGREE,
    HExpansion,
    LogLaurentSeries,
    LogPoly,
    SymbolicConstant,
)

__all__ = [
    "MAX_LOG_DEGREE",
    "HExpansion",
    "LogLaurentSeries",
    "LogPoly",
    "SymbolicConstant",
    "closed_form",
    "evaluate",
    "format_h_expansion",
    "format_series",
    "h_power_series",
    "h_series",
    "inv_h_power",
    "inv_h_series",
    "one_series",
    "prefactor_series",
    "series_add",
    "series_mul",
    "series_scale",
    "series_sub",
    "zero_series",
]
