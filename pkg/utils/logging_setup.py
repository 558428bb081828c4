"""
Logging configuration for the command-line entry point.
"""
import logging
import sys
from typing import Optional

from config.settings import get_logging_config


def configure_logging(verbose: bool = False, level: Optional[str] = None) -> None:
    """Configure the root logger once; records go to stderr so stdout stays clean."""
    config = get_logging_config()
    chosen = "DEBUG" if verbose else (level or config["level"])
    logging.basicConfig(
        level=getattr(logging, chosen),
        format=config["format"],
        stream=sys.stderr,
    )
