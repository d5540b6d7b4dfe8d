"""
app/helpers.py
---------------
Helper utilities shared by the CLI commands.

Purpose:
- Application name and version
- Number formatting (17 significant digits for machine formats, 6 for humans)
- CSV and JSON emitters with a fixed column order
"""

import json
import math

import pandas as pd

APP_NAME = "busymax"
APP_VERSION = "v1.0"

CSV_FLOAT_FORMAT = "%.17g"


def fmt6(value):
    """Readable text form of a float."""
    return f"{value:.6g}"


def write_csv(rows, columns, stream):
    """
    Write rows as CSV with exactly the given columns, in order.

    Args:
        rows: Iterable of dicts keyed by column name (missing keys print empty)
        columns: Column names, in output order
        stream: Text stream

    Floats print with 17 significant digits; lines end in '\\n'.
    """
    frame = pd.DataFrame(list(rows), columns=list(columns))
    stream.write(
        frame.to_csv(index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
    )


def _json_safe(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {k: _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    return value


def write_json(payload, stream):
    """Write payload as indented JSON; non-finite floats become null."""
    json.dump(_json_safe(payload), stream, indent=2, ensure_ascii=False)
    stream.write("\n")
