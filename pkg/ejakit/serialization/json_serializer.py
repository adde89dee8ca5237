"""
Deterministic JSON rendering.

Floats are written with a fixed number of significant digits (17 round-trips
every double), non-finite floats become null and key order is preserved.
"""
import json
import math
from typing import Any, Optional

import numpy as np
from pydantic import BaseModel

from ejakit.env import get_settings
from ejakit.exceptions import DescriptorException


def _float(value: float, digits: int) -> str:
    if not math.isfinite(value):
        return "null"
    text = f"{value:.{digits}g}"
    if not any(c in text for c in ".e"):
        text += ".0"
    return text


def _render(value: Any, digits: int) -> str:
    if isinstance(value, BaseModel):
        return _render(value.model_dump(), digits)
    if value is None:
        return "null"
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return _float(float(value), digits)
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)
    if isinstance(value, np.ndarray):
        return _render(value.tolist(), digits)
    if isinstance(value, dict):
        items = (f"{json.dumps(str(k), ensure_ascii=False)}: {_render(v, digits)}" for k, v in value.items())
        return "{" + ", ".join(items) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_render(v, digits) for v in value) + "]"
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def dumps(value: Any, digits: Optional[int] = None) -> str:
    """
    :param value: nested dicts, lists, scalars, numpy arrays or pydantic models
    :param digits: significant digits for floats, eja.output.float_digits by default
    """
    if digits is None:
        digits = get_settings().output.float_digits
    return _render(value, digits)


def loads(text: str, what: str = "JSON") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DescriptorException(what, str(e)) from e
