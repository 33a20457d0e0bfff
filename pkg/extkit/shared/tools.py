import json
import math
from typing import Any

import numpy as np


def format_float(value: float) -> str:
    return format(float(value), ".17g")


def to_plain(value: Any) -> Any:
    """Turn numpy scalars/arrays and complex numbers into JSON-friendly values"""
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return [to_plain(v) for v in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (complex, np.complexfloating)):
        return {"re": float(value.real), "im": float(value.imag)}
    if isinstance(value, (float, np.floating)):
        return float(value)
    return value


def to_json_text(value: Any, indent: int = 2, _level: int = 0) -> str:
    """JSON text with every float written with 17 significant digits.

    The output only depends on the values, so identical inputs give
    byte-identical documents.
    """
    value = to_plain(value) if _level == 0 else value
    pad = " " * (indent * (_level + 1))
    closing_pad = " " * (indent * _level)

    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [
            f"{pad}{json.dumps(k)}: {to_json_text(v, indent, _level + 1)}"
            for k, v in value.items()
        ]
        return "{\n" + ",\n".join(items) + f"\n{closing_pad}}}"
    if isinstance(value, list):
        if not value:
            return "[]"
        items = [f"{pad}{to_json_text(v, indent, _level + 1)}" for v in value]
        return "[\n" + ",\n".join(items) + f"\n{closing_pad}]"
    if isinstance(value, bool) or value is None:
        return json.dumps(value)
    if isinstance(value, float):
        return format_float(value) if math.isfinite(value) else "null"
    return json.dumps(value)


__all__ = ["format_float", "to_json_text", "to_plain"]
