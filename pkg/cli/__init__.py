"""
CLI module - Contains the petalkit command-line application.
"""
from cli.commands import app, run

__all__ = ["app", "run"]
