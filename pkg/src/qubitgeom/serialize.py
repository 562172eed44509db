"""JSON rendering with 17-significant-digit decimal floats.

The stock json module formats floats with repr, which is shortest-roundtrip
rather than fixed-precision; CLI output needs byte-stable 17-significant-
digit decimals, so this walks the structure itself. Complex numbers render
as [re, im] pairs.
"""

from __future__ import annotations

import json

import numpy as np


def _fmt_float(x: float) -> str:
    return format(float(x), ".17g")


def dumps(obj) -> str:
    if obj is None:
        return "null"
    if isinstance(obj, bool) or isinstance(obj, np.bool_):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return dumps([obj.real, obj.imag])
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, np.ndarray):
        return dumps(obj.tolist())
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    if isinstance(obj, dict):
        items = (f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items())
        return "{" + ", ".join(items) + "}"
    raise TypeError(f"cannot serialize {type(obj)!r}")
