"""
Resolve command inputs given inline, as a file path, or on standard input.
"""
import json
import sys
from pathlib import Path
from typing import Any, Optional

from core.errors import MoveScriptError


def read_text(source: Optional[str]) -> str:
    """Inline text, the contents of an existing file, or stdin when source is None or '-'."""
    if source is None or source == "-":
        return sys.stdin.read()
    path = Path(source)
    if path.is_file():
        return path.read_text(encoding="utf-8")
    return source


def read_json(source: Optional[str]) -> Any:
    text = read_text(source)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MoveScriptError(f"invalid JSON input: {exc.msg} at line {exc.lineno}") from exc
