"""
app/audit.py
------------
Audit logging utility for the toolkit.

Purpose:
- Centralized audit log of every computation the CLI runs
- Error logging for failed computations
- Log rotation to prevent disk space issues
"""

import logging
import os
from logging.handlers import RotatingFileHandler


def _drop_file_handlers(logger):
    # Replace handlers left over from an earlier create_app()
    for handler in list(logger.handlers):
        if isinstance(handler, RotatingFileHandler):
            logger.removeHandler(handler)
            handler.close()


def _configure(name, level, path):
    logger = logging.getLogger(name)
    logger.setLevel(level)
    _drop_file_handlers(logger)
    handler = RotatingFileHandler(
        path,
        maxBytes=10*1024*1024,  # 10MB
        backupCount=5
    )
    handler.setFormatter(logging.Formatter(
        '%(asctime)s | %(levelname)s | %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    ))
    logger.addHandler(handler)
    logger.propagate = False
    return logger


def setup_logging(app):
    """
    Initialize logging configuration for the Flask app.

    Creates two log files under LOG_DIR:
    - audit.log: One line per computation (command, method, result)
    - error.log: Parameter, convergence and step-cap failures

    With DEBUG set, a third file debug.log receives the truncation
    diagnostics of the numeric modules (terms summed, partitions used).

    Args:
        app: Flask application instance
    """
    log_dir = app.config.get('LOG_DIR', 'logs')
    os.makedirs(log_dir, exist_ok=True)

    _configure('audit', logging.INFO, os.path.join(log_dir, 'audit.log'))
    _configure('error', logging.ERROR, os.path.join(log_dir, 'error.log'))

    if app.config.get('DEBUG'):
        _configure('app', logging.DEBUG, os.path.join(log_dir, 'debug.log'))
    else:
        library = logging.getLogger('app')
        _drop_file_handlers(library)
        library.setLevel(logging.NOTSET)
        library.propagate = True


def log_compute_event(command, method, result, details=None):
    """
    Log a computation.

    Args:
        command: CLI command ('dist', 'moment', 'expand', 'compare', 'simulate')
        method: Route used ('exact', 'brute', 'asymptotic', 'simulate', ...)
        result: 'SUCCESS', 'WARNING' or 'FAILURE'
        details: Additional details (optional)
    """
    logger = logging.getLogger('audit')

    message = f"COMMAND: {command} | METHOD: {method} | RESULT: {result}"
    if details:
        message += f" | DETAILS: {details}"

    if result == 'WARNING':
        logger.warning(message)
    else:
        logger.info(message)


def log_error(error_type, message, details=None):
    """
    Log errors.

    Args:
        error_type: Error type ('PARAMETER', 'CONVERGENCE', 'STEP_CAP', ...)
        message: Error message
        details: Additional details (optional)
    """
    logger = logging.getLogger('error')

    log_message = f"ERROR_TYPE: {error_type} | MESSAGE: {message}"
    if details:
        log_message += f" | DETAILS: {details}"

    logger.error(log_message)
