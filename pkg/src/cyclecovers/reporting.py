"""Stable, diff-friendly structured-text output.

Documents are JSON with sorted keys; every float is rounded to 12
significant digits before serialization so identical runs emit identical
bytes.
"""

from __future__ import annotations

import json
from typing import Any


def round_sig(x: float, digits: int = 12) -> float:
    if x == 0.0:
        return 0.0
    return float(f"{x:.{digits}g}")


def _canonical(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, float):
        return round_sig(obj)
    if isinstance(obj, int):
        return obj
    if isinstance(obj, str):
        return obj
    if isinstance(obj, dict):
        return {str(k): _canonical(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_canonical(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj)!r}")


def stable_text(obj: Any) -> str:
    """Key-sorted JSON with canonicalized floats, newline terminated."""
    return json.dumps(_canonical(obj), sort_keys=True, indent=2) + "\n"
