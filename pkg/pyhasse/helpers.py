"""Helper functions for the PyHasse Module."""
from __future__ import annotations

from collections.abc import Iterable, Sequence
import csv
from dataclasses import fields, is_dataclass
from enum import Enum
from fractions import Fraction
import io
import json

from .constants import FORMAT_CSV, FORMAT_JSON, FORMAT_TABLE, JSON_SAFE_INTEGER
from .exceptions import INTEGRALITY_ERROR, IntegralityViolation, InvalidParameterError


def exact_integer(value: Fraction, label: str) -> int:
    """
    Return value as an int, asserting it is a nonnegative integer.

    Args:
        value: exact rational produced by a genus or fixed-point formula
        label: name of the quantity, used in the error message

    Raises:
        IntegralityViolation when value is fractional or negative.

    """
    if value.denominator != 1 or value < 0:
        raise IntegralityViolation(f"{INTEGRALITY_ERROR} {label} = {value}")
    return int(value)


def to_plain(obj):
    """Project dataclasses, enums and fractions onto JSON-ready data."""
    if hasattr(obj, "to_dict"):
        return to_plain(obj.to_dict())
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > JSON_SAFE_INTEGER else obj
    if isinstance(obj, Fraction):
        return {"num": to_plain(obj.numerator), "den": to_plain(obj.denominator)}
    if isinstance(obj, Enum):
        return to_plain(obj.value)
    if is_dataclass(obj):
        return {fld.name: to_plain(getattr(obj, fld.name)) for fld in fields(obj)}
    if isinstance(obj, dict):
        return {str(key): to_plain(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_plain(item) for item in obj]
    raise InvalidParameterError(f"Cannot serialize {type(obj).__name__}")


def canonical_json(obj) -> str:
    """Return the canonical JSON document for obj, newline terminated."""
    return json.dumps(to_plain(obj), sort_keys=True, indent=2) + "\n"


def render_rows(
    headers: Sequence[str], rows: Iterable[Sequence], fmt: str = FORMAT_TABLE
) -> str:
    """
    Render rows as an aligned table, unquoted CSV or a JSON list of objects.

    Args:
        headers: column names
        rows: one sequence of cell values per row
        fmt: one of table, csv, json

    """
    rows = [list(row) for row in rows]
    if fmt == FORMAT_JSON:
        return canonical_json([dict(zip(headers, row)) for row in rows])
    if fmt == FORMAT_CSV:
        buffer = io.StringIO()
        writer = csv.writer(
            buffer, quoting=csv.QUOTE_NONE, escapechar="\\", lineterminator="\n"
        )
        writer.writerow(headers)
        writer.writerows(rows)
        return buffer.getvalue()
    if fmt != FORMAT_TABLE:
        raise InvalidParameterError(f"Unknown output format {fmt}")

    cells = [[str(cell) for cell in row] for row in rows]
    widths = [len(header) for header in headers]
    for row in cells:
        widths = [max(width, len(cell)) for width, cell in zip(widths, row)]
    lines = [
        "  ".join(header.ljust(width) for header, width in zip(headers, widths)),
        "  ".join("-" * width for width in widths),
    ]
    lines.extend(
        "  ".join(cell.rjust(width) for cell, width in zip(row, widths)) for row in cells
    )
    return "\n".join(line.rstrip() for line in lines) + "\n"
