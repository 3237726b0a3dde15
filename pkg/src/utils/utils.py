"""
Author  : Coke
Date    : 2025-06-03
"""

import math

from pydantic import ValidationError


def format_validation_errors(e: ValidationError) -> str:
    """
    Format Pydantic validation errors into a human-readable string.

    Args:
        e (ValidationError): The exception instance containing validation errors.

    Returns:
        str: A semicolon-separated string describing all validation errors,
             with each error showing its location and message.
    """
    errors = []
    for item in e.errors():
        loc = item.get("loc", ["unknown"])
        loc_str = ".".join(str(part) for part in loc) or "value"
        msg = str(item.get("msg", "error.")).lower()
        errors.append(f"{loc_str} {msg}")
    return "; ".join(errors)


def format_number(value: float | int | None) -> str:
    """
    Format a CSV cell: integers verbatim, floats as the shortest round-trip decimal, None as empty.

    Examples:
        format_number(0.1)
        >> "0.1"
        format_number(float("inf"))
        >> "inf"
    """
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, int):
        return str(value)
    value = float(value)
    if math.isnan(value):
        return "nan"
    return repr(value)


def safe_ratio(numerator: float, denominator: float) -> float:
    """
    Sharpness ratio numerator / denominator with 0/0 := 0 and x/0 := inf for x > 0.
    """
    if numerator == 0.0:
        return 0.0
    if denominator <= 0.0:
        return math.inf
    return numerator / denominator
