"""Deterministic JSON/CSV emission.

All floating values are written with 17 significant digits (``%.17g``),
which round-trips every finite IEEE double exactly and makes repeated
runs byte-identical.  The JSON writer keeps dict insertion order and
renders flat numeric lists (e.g. quaternion quadruples) on one line.
"""

from __future__ import annotations

import csv
import json
import math

__all__ = ["fmt_float", "dumps_json", "dump_json", "load_json", "write_csv"]


def fmt_float(value: float) -> str:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"non-finite value in output: {value!r}")
    return format(value, ".17g")


def _is_flat_numbers(obj) -> bool:
    return isinstance(obj, (list, tuple)) and all(
        isinstance(v, (int, float)) and not isinstance(v, bool) for v in obj
    )


def _emit(obj, lines, indent):
    pad = "  " * indent
    if obj is None:
        lines.append("null")
    elif isinstance(obj, bool):
        lines.append("true" if obj else "false")
    elif isinstance(obj, str):
        lines.append(json.dumps(obj))
    elif isinstance(obj, int):
        lines.append(repr(obj))
    elif isinstance(obj, float):
        lines.append(fmt_float(obj))
    elif _is_flat_numbers(obj):
        inner = ", ".join(
            repr(v) if isinstance(v, int) else fmt_float(v) for v in obj
        )
        lines.append(f"[{inner}]")
    elif isinstance(obj, (list, tuple)):
        if not obj:
            lines.append("[]")
            return
        lines.append("[\n")
        for n, item in enumerate(obj):
            lines.append(pad + "  ")
            _emit(item, lines, indent + 1)
            lines.append(",\n" if n + 1 < len(obj) else "\n")
        lines.append(pad + "]")
    elif isinstance(obj, dict):
        if not obj:
            lines.append("{}")
            return
        lines.append("{\n")
        items = list(obj.items())
        for n, (key, item) in enumerate(items):
            if not isinstance(key, str):
                raise TypeError(f"JSON keys must be strings, got {key!r}")
            lines.append(pad + "  " + json.dumps(key) + ": ")
            _emit(item, lines, indent + 1)
            lines.append(",\n" if n + 1 < len(items) else "\n")
        lines.append(pad + "}")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__} deterministically")


def dumps_json(obj) -> str:
    lines = []
    _emit(obj, lines, 0)
    lines.append("\n")
    return "".join(lines)


def dump_json(obj, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(dumps_json(obj))


def load_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def write_csv(path, header, rows) -> None:
    """Write rows of numbers/strings; floats formatted at 17 digits."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([
                fmt_float(v) if isinstance(v, float) else v for v in row
            ])
