"""Canonical JSON emission: sorted keys, 17-significant-digit floats, LF.

``json.dumps`` renders floats with shortest round-trip repr, which is
machine-dependent-looking even when stable; reports instead pin floats to
'%.17g' (still round-trip exact) so emitted documents are byte-identical
across runs and easy to diff.
"""
from __future__ import annotations

import math
from typing import Any

__all__ = ["canonical_json", "format_float"]


def format_float(x: float, digits: int = 17) -> str:
    if math.isnan(x) or math.isinf(x):
        raise ValueError(f"non-finite float {x!r} cannot be serialized")
    s = format(x, f".{digits}g")
    return s


def _escape(s: str) -> str:
    out = ['"']
    for ch in s:
        if ch == '"':
            out.append('\\"')
        elif ch == "\\":
            out.append("\\\\")
        elif ch == "\n":
            out.append("\\n")
        elif ch == "\t":
            out.append("\\t")
        elif ch == "\r":
            out.append("\\r")
        elif ord(ch) < 0x20:
            out.append(f"\\u{ord(ch):04x}")
        else:
            out.append(ch)
    out.append('"')
    return "".join(out)


def _render(obj: Any, indent: int, level: int) -> str:
    pad = " " * (indent * level)
    pad_in = " " * (indent * (level + 1))
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, str):
        return _escape(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [_render(v, indent, level + 1) for v in obj]
        return "[\n" + ",\n".join(pad_in + it for it in items) + "\n" + pad + "]"
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = []
        for key in sorted(obj):
            if not isinstance(key, str):
                raise TypeError(f"JSON object keys must be strings, got {key!r}")
            items.append(pad_in + _escape(key) + ": " + _render(obj[key], indent, level + 1))
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    raise TypeError(f"cannot serialize {type(obj).__name__} canonically")


def canonical_json(obj: Any, indent: int = 2) -> str:
    """Serialize ``obj`` deterministically; trailing newline, LF endings."""
    return _render(obj, indent, 0) + "\n"
