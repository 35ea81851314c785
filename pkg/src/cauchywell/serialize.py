"""Deterministic CSV/JSON emitters for the CLI artifacts.

Floats are written with 17 significant digits, which round-trips binary64
exactly; identical payloads therefore always produce byte-identical files.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

__all__ = ["format_float", "csv_document", "json_document", "SCHEMA_VERSION"]

SCHEMA_VERSION = "1"


def format_float(value: float) -> str:
    """17-significant-digit decimal form, always distinguishable from an int."""
    text = format(float(value), ".17g")
    if "e" not in text and "E" not in text and "." not in text and "inf" not in text and "nan" not in text:
        text += ".0"
    return text


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def csv_document(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    """Comma-separated document with a trailing newline; no quoting is done,
    so cells must not contain commas or newlines."""
    lines = [",".join(header)]
    lines.extend(",".join(_cell(value) for value in row) for row in rows)
    return "\n".join(lines) + "\n"


def _emit_json(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, dict):
        items = (f"{json.dumps(str(key))}: {_emit_json(item)}" for key, item in value.items())
        return "{" + ", ".join(items) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_emit_json(item) for item in value) + "]"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def json_document(payload: dict) -> str:
    """Render a JSON document (insertion-ordered keys) with a trailing newline."""
    return _emit_json(payload) + "\n"
