"""
app/error_handlers.py
---------------------
Centralised error handling for the toolkit's commands.

Purpose:
- Map toolkit exceptions to stable exit codes (2 usage, 3 convergence, 4 step cap)
- Log every failure to the error log with the command name
- Keep tracebacks out of normal CLI output
"""

import functools

import click
from flask import current_app

from app.audit import log_compute_event, log_error
from app.errors import ConvergenceError, ParameterError, StepCapExceeded

EXIT_CODES_KEY = "busymax.exit_codes"


class ConvergenceFailure(click.ClickException):
    """A numeric route could not meet its truncation bound."""

    exit_code = 3


class StepCapFailure(click.ClickException):
    """A simulated busy period ran past the step cap."""

    exit_code = 4


# Exception type -> (log label, click exception raised)
DEFAULT_EXIT_CODES = (
    (ParameterError, "PARAMETER", click.UsageError),
    (StepCapExceeded, "STEP_CAP", StepCapFailure),
    (ConvergenceError, "CONVERGENCE", ConvergenceFailure),
)


def register_errorhandlers(app):
    """
    Install the exception to exit-code mapping on the app.

    Args:
        app: Flask application instance
    """
    app.extensions[EXIT_CODES_KEY] = DEFAULT_EXIT_CODES


def _exit_codes():
    return current_app.extensions.get(EXIT_CODES_KEY, DEFAULT_EXIT_CODES)


def handles_toolkit_errors(command_name):
    """
    Decorator for CLI commands: turn toolkit errors into click exceptions.

    A `method` attribute set on the exception (by the command) is prefixed to
    the message, so `--method all` failures name the route that failed.
    """

    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except tuple(exc for exc, _, _ in _exit_codes()) as error:
                method = getattr(error, "method", None)
                message = f"{method}: {error}" if method else str(error)
                for exc_type, label, click_exc in _exit_codes():
                    if isinstance(error, exc_type):
                        log_error(label, message, details=f"Command: {command_name}")
                        log_compute_event(command_name, method or "-", "FAILURE")
                        raise click_exc(message) from error
                raise

        return wrapper

    return decorator
