"""
app/simulate/engine.py
----------------------
Monte Carlo busy periods on the embedded jump chain.

Purpose:
- A busy period starts with one customer; each event is an arrival with
  probability p = lam/(1+lam), else a service completion
- The maximum queue length is recorded when the queue empties
- Replicates are split into partitions with independent Philox streams, so
  results depend on (seed, n, lambda, partitions) and never on worker count
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from app.errors import ParameterError, StepCapExceeded
from app.exact.models import TrafficIntensity
from app.simulate.models import EmpiricalSummary, Estimate, RngSeed

logger = logging.getLogger(__name__)

DEFAULT_STEP_CAP = 10 ** 8


def _arrival_probability(intensity):
    return intensity.lam / (1.0 + intensity.lam)


def simulate_busy_period(lam, rng, step_cap=DEFAULT_STEP_CAP):
    """
    Simulate one busy period and return its maximum queue length.

    Args:
        lam: TrafficIntensity or float, 0 < lambda < 1
        rng: numpy Generator
        step_cap: Maximum number of events before giving up

    Returns:
        int >= 1

    Raises:
        StepCapExceeded: the queue did not empty within step_cap events.
    """
    intensity = TrafficIntensity.coerce(lam).require_stable()
    if step_cap < 1:
        raise ParameterError(f"step_cap must be >= 1, got {step_cap}")
    p_up = _arrival_probability(intensity)

    queue = peak = 1
    steps = 0
    batch = 16
    while True:
        for x in rng.random(batch).tolist():
            steps += 1
            if steps > step_cap:
                raise StepCapExceeded(step_cap, peak)
            if x < p_up:
                queue += 1
                if queue > peak:
                    peak = queue
            else:
                queue -= 1
                if queue == 0:
                    return peak
        batch = min(batch * 2, 1 << 16)


def _simulate_block(p_up, size, rng, step_cap, offset):
    """Run `size` busy periods in lockstep; returns their maxima in index order."""
    maxima = np.empty(size, dtype=np.int64)
    idx = np.arange(size)
    queue = np.ones(size, dtype=np.int64)
    peak = np.ones(size, dtype=np.int64)
    steps = 0
    while idx.size:
        steps += 1
        if steps > step_cap:
            raise StepCapExceeded(step_cap, int(peak[0]), replicate=offset + int(idx[0]))
        queue += np.where(rng.random(idx.size) < p_up, 1, -1)
        np.maximum(peak, queue, out=peak)
        done = queue == 0
        if done.any():
            maxima[idx[done]] = peak[done]
            keep = ~done
            idx, queue, peak = idx[keep], queue[keep], peak[keep]
    return maxima


def _partition_sizes(n, partitions):
    base, extra = divmod(n, partitions)
    return [base + (1 if b < extra else 0) for b in range(partitions)]


def simulate_many(lam, n, seed=0, step_cap=DEFAULT_STEP_CAP, partitions=8, workers=1):
    """
    Simulate n independent busy periods.

    Args:
        lam: TrafficIntensity or float, 0 < lambda < 1
        n: Number of busy periods, >= 1
        seed: RngSeed or int
        step_cap: Per-busy-period event cap
        partitions: Number of independent streams the replicates are split into
        workers: Threads used to run partitions concurrently

    Returns:
        EmpiricalSummary, identical for fixed (seed, n, lambda, partitions)

    Raises:
        StepCapExceeded: carries the global index of the offending replicate
        (the lowest-numbered failing partition is reported).
    """
    intensity = TrafficIntensity.coerce(lam).require_stable()
    if not isinstance(n, int) or n < 1:
        raise ParameterError(f"n must be an integer >= 1, got {n!r}")
    if partitions < 1 or workers < 1 or step_cap < 1:
        raise ParameterError("partitions, workers and step_cap must all be >= 1")
    seed = RngSeed.coerce(seed)
    p_up = _arrival_probability(intensity)

    jobs = []
    offset = 0
    for stream, size in enumerate(_partition_sizes(n, partitions)):
        if size:
            jobs.append((stream, size, offset))
        offset += size

    def run(job):
        stream, size, start = job
        return _simulate_block(p_up, size, seed.generator(stream), step_cap, start)

    if workers == 1 or len(jobs) == 1:
        blocks = [run(job) for job in jobs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(run, job) for job in jobs]
            blocks = [f.result() for f in futures]

    logger.debug("simulated %d busy periods in %d partitions", n, len(jobs))
    return EmpiricalSummary.from_maxima(
        np.concatenate(blocks), lam=intensity.lam, seed=int(seed.seed)
    )


def empirical_tail(summary, l):
    """
    Empirical Pr[L > l] with binomial standard error sqrt(p(1-p)/n).

    Returns:
        Estimate(value, stderr)
    """
    if l < 0:
        raise ParameterError(f"l must be >= 0, got {l}")
    above = sum(c for level, c in summary.histogram if level > l)
    p = above / summary.n
    return Estimate(p, math.sqrt(p * (1.0 - p) / summary.n))
