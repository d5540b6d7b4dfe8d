"""
app/special/summation.py
------------------------
Chunked summation of slowly decaying positive series.

Purpose:
- Sum terms in numpy blocks of doubling size
- Stop on an analytic tail bound supplied by the caller, never on term size alone
"""

import logging
import math

import numpy as np

from app.errors import ConvergenceError

logger = logging.getLogger(__name__)

# Hard ceiling on the number of terms any single series may use
MAX_TERMS = 200_000_000


def sum_until_tail(terms, tail_bound, rel_tol, start=1, first_chunk=1024,
                   max_terms=MAX_TERMS):
    """
    Sum a positive series term block by term block.

    Args:
        terms: Callable mapping a float64 index array to the term values
        tail_bound: Callable mapping the last summed index M to an upper bound
            on the sum of all terms with index > M (inf when no bound applies yet)
        rel_tol: Stop once tail_bound(M) <= rel_tol * partial sum
        start: First index of the series
        first_chunk: Size of the first block; later blocks double
        max_terms: Raise instead of summing past this many terms

    Returns:
        tuple: (partial sum, last index summed)

    Raises:
        ConvergenceError: The bound was not met within max_terms.
    """
    partials = []
    lo = start
    chunk = first_chunk
    while True:
        hi = lo + chunk
        idx = np.arange(lo, hi, dtype=np.float64)
        partials.append(float(np.sum(terms(idx))))
        total = math.fsum(partials)
        last = hi - 1
        if tail_bound(last) <= rel_tol * abs(total):
            logger.debug("series converged after %d terms", last - start + 1)
            return total, last
        if last - start + 1 >= max_terms:
            raise ConvergenceError(
                f"tail bound not met after {last - start + 1} terms "
                f"(relative tolerance {rel_tol:g})"
            )
        lo = hi
        chunk = min(chunk * 2, 1 << 22)
