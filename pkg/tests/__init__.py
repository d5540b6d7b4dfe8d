"""
Test package for busymax (lets tests import run.py from the repository root).
"""
