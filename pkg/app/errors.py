"""
app/errors.py
-------------
Exception hierarchy for the toolkit.

Purpose:
- Give every numeric module one vocabulary for failures
- Let the CLI map failures to stable exit codes (see error_handlers.py)
"""


class ToolkitError(Exception):
    """Base class for every error raised by the toolkit."""


class ParameterError(ToolkitError, ValueError):
    """A precondition on an argument was violated (e.g. lambda >= 1)."""


class ConvergenceError(ToolkitError, ArithmeticError):
    """A truncation bound could not be met or a fit saw unusable data."""


class LogDegreeOverflow(ConvergenceError):
    """A series product would carry a log power above the supported cap."""


class StepCapExceeded(ToolkitError, RuntimeError):
    """
    A simulated busy period ran past the step cap without emptying the queue.

    Attributes:
        replicate: Index of the offending replicate (None for a single walk)
        partial_max: Largest queue length seen before the cap was hit
        step_cap: The cap that was exceeded
    """

    def __init__(self, step_cap, partial_max, replicate=None):
        self.step_cap = step_cap
        self.partial_max = partial_max
        self.replicate = replicate
        where = "" if replicate is None else f" in replicate {replicate}"
        super().__init__(
            f"busy period exceeded {step_cap} steps{where} "
            f"(partial maximum {partial_max}); lambda is too close to 1 for this cap"
        )
