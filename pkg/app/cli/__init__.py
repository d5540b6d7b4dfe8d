"""
app/cli/__init__.py
-------------------
CLI blueprint package initializer.

Purpose:
- Exposes the command blueprint for import into the main app factory.
"""

from app.cli.commands import cli_bp
