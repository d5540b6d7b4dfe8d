"""
tests/conftest.py
-----------------
Pytest configuration and fixtures for the toolkit.
"""

import pytest

from app import create_app


@pytest.fixture
def app(tmp_path):
    """
    Create application for testing with logs in a temporary directory.

    Returns:
        Flask app instance configured for testing.
    """
    app = create_app({
        'TESTING': True,
        'LOG_DIR': str(tmp_path / 'logs'),
        'DEFAULT_SAMPLES': 2000,
        'SIM_WORKERS': 2,
    })
    yield app


@pytest.fixture
def runner(app):
    """
    Create CLI test runner for Flask app.

    Args:
        app: Flask app instance from app fixture.

    Returns:
        Flask CLI test runner.
    """
    return app.test_cli_runner()


@pytest.fixture
def log_dir(app):
    """Directory holding audit.log and error.log for this test."""
    from pathlib import Path
    return Path(app.config['LOG_DIR'])
