"""
run.py
------
Entry point for the busy-period maximum queue toolkit.

Purpose:
- Imports the create_app() factory from app/__init__.py
- Exposes the app's commands as a command-line program:

    python run.py dist --lambda 0.5 --lmax 10
    python run.py moment --lambda 0.99 --k 2 --method all
    python run.py expand --variance --order 3
"""

import click
from flask.cli import FlaskGroup

# Import the factory function
from app import create_app
from app.helpers import APP_NAME, APP_VERSION

# Command group whose app is built by the factory
cli = FlaskGroup(create_app=create_app, add_default_commands=False, add_version_option=False)
cli = click.version_option(APP_VERSION, prog_name=APP_NAME)(cli)

if __name__ == "__main__":
    cli()
