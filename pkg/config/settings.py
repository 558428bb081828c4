"""
Configuration settings for petalkit.
"""
import os
from typing import Any, Dict, Optional

from dotenv import load_dotenv

from core.errors import ConfigurationError

# Load environment variables
load_dotenv()

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


def _env_int(name: str, default: Optional[int], minimum: int = 0) -> Optional[int]:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}") from exc
    if value < minimum:
        raise ConfigurationError(f"{name} must be at least {minimum}, got {value}")
    return value


def _env_bool(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    lowered = raw.strip().lower()
    if lowered in _TRUE:
        return True
    if lowered in _FALSE:
        return False
    raise ConfigurationError(f"{name} must be a boolean, got {raw!r}")


def get_search_config() -> Dict[str, Any]:
    """Get path search settings; petal_bound None means derive it from the endpoints."""
    return {
        "petal_bound": _env_int("PETALKIT_PETAL_BOUND", None, minimum=1),
        "depth_bound": _env_int("PETALKIT_DEPTH_BOUND", 6),
        "bidirectional": _env_bool("PETALKIT_BIDIRECTIONAL", True),
        "invariant_prefilter": _env_bool("PETALKIT_PREFILTER", True),
        "threads": _env_int("PETALKIT_THREADS", 1, minimum=1),
        # added to the longer endpoint when petal_bound is derived
        "petal_margin": 4,
    }


def get_sampling_config() -> Dict[str, Any]:
    """Get random petal sampling settings."""
    return {
        "seed": _env_int("PETALKIT_SEED", 0),
        "generator": "PCG64",
    }


def get_logging_config() -> Dict[str, Any]:
    """Get logging settings."""
    level = os.getenv("PETALKIT_LOG_LEVEL", "WARNING").strip().upper()
    if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
        raise ConfigurationError(f"PETALKIT_LOG_LEVEL is not a logging level: {level!r}")
    return {
        "level": level,
        "format": LOG_FORMAT,
    }


def get_cli_config() -> Dict[str, Any]:
    """Get command-line output settings."""
    return {
        "json_indent": None,
        "json_separators": (",", ":"),
        "word_separator": ",",
    }
