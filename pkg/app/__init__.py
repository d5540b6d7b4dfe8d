"""
app/__init__.py
---------------
Main application factory for the busy-period maximum queue toolkit.

Purpose:
- Implements the Flask "application factory" pattern.
- Loads configuration from config.py
- Sets up audit logging, the exit-code mapping, and the CLI blueprint
  (dist, moment, expand, compare, simulate).
"""

from flask import Flask

# Import Blueprints
from app.cli import cli_bp

from app.error_handlers import register_errorhandlers

# Import audit logging
from app.audit import setup_logging


def create_app(config_overrides=None):
    """
    Factory function for creating and configuring the Flask app.

    Args:
        config_overrides: Optional mapping applied after config.Config
            (tests use it to point LOG_DIR at a temporary directory)

    Returns:
        A fully configured Flask app instance.
    """

    # Step 1: Create Flask instance
    app = Flask(__name__)

    # Step 2: Load configuration from config.py (Config class)
    app.config.from_object("config.Config")
    if config_overrides:
        app.config.update(config_overrides)

    # Step 3: Initialise Audit Logging
    setup_logging(app)

    # Step 4: Register error handling (toolkit errors -> exit codes)
    register_errorhandlers(app)

    # Step 5: Register Blueprints (commands appear at the top level)
    app.register_blueprint(cli_bp)

    # Step 6: Return the configured Flask app
    return app
