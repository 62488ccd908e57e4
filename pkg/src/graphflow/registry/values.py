"""Value kinds carried on ports and wires, plus the literal codec.

One kind per port; the only implicit wire coercion is Integer into
Number. `Any` ports accept and emit anything. Literals use the same
textual forms everywhere: scripts, exported docs, saved documents.
"""
from __future__ import annotations

import json
import math
from enum import Enum

from graphflow.geometry import (
    WORLD_XY,
    WORLD_XZ,
    WORLD_YZ,
    Circle,
    Extrusion,
    Loft,
    Plane,
    Point3,
    Polyline,
    Vector3,
)


class ValueKind(Enum):
    NUMBER = "Number"
    INTEGER = "Integer"
    BOOLEAN = "Boolean"
    TEXT = "Text"
    VECTOR = "Vector"
    POINT = "Point"
    PLANE = "Plane"
    CURVE = "Curve"
    SOLID = "Solid"
    ANY = "Any"


class KindError(ValueError):
    """A value does not fit the kind a port declares."""


def kind_of(value) -> ValueKind:
    # bool subclasses int, so check it first
    if isinstance(value, bool):
        return ValueKind.BOOLEAN
    if isinstance(value, int):
        return ValueKind.INTEGER
    if isinstance(value, float):
        return ValueKind.NUMBER
    if isinstance(value, str):
        return ValueKind.TEXT
    if isinstance(value, Vector3):
        return ValueKind.VECTOR
    if isinstance(value, Point3):
        return ValueKind.POINT
    if isinstance(value, Plane):
        return ValueKind.PLANE
    if isinstance(value, (Circle, Polyline)):
        return ValueKind.CURVE
    if isinstance(value, (Extrusion, Loft)):
        return ValueKind.SOLID
    raise KindError(f"no value kind for {type(value).__name__}")


def wire_compatible(src: ValueKind, dst: ValueKind) -> bool:
    if src == dst or src == ValueKind.ANY or dst == ValueKind.ANY:
        return True
    return src == ValueKind.INTEGER and dst == ValueKind.NUMBER


def accepts_value(kind: ValueKind, value) -> bool:
    try:
        actual = kind_of(value)
    except KindError:
        return False
    return wire_compatible(actual, kind)


def coerce_value(value, kind: ValueKind):
    """Fit a runtime value to a port kind (Integer widens to Number)."""
    if kind == ValueKind.NUMBER and isinstance(value, int) and not isinstance(value, bool):
        return float(value)
    if not accepts_value(kind, value):
        raise KindError(f"{kind.value} port cannot accept {type(value).__name__} value {value!r}")
    return value


_WORLD_PLANES = {"plane.xy": WORLD_XY, "plane.yz": WORLD_YZ, "plane.xz": WORLD_XZ}
_PLANE_NAMES = {plane: name for name, plane in _WORLD_PLANES.items()}


def _format_number(v: float) -> str:
    if v != v or math.isinf(v):
        raise KindError(f"cannot format non-finite number {v!r}")
    return repr(v)


def format_literal(value) -> str:
    """Canonical text form of a literal; parse_literal inverts it."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return repr(value)
    if isinstance(value, float):
        return _format_number(value)
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, (Vector3, Point3)):
        return f"({_format_number(value.x)}, {_format_number(value.y)}, {_format_number(value.z)})"
    if isinstance(value, Plane):
        name = _PLANE_NAMES.get(value)
        if name is None:
            raise KindError("only the world planes have a literal form")
        return name
    raise KindError(f"no literal form for {type(value).__name__}")


def _parse_number(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise KindError(f"bad number literal {text!r}") from None


def parse_literal(text: str, kind: ValueKind):
    """Parse a literal in the context of the port kind receiving it."""
    s = text.strip()
    if not s:
        raise KindError("empty literal")
    if s in _WORLD_PLANES:
        return coerce_value(_WORLD_PLANES[s], kind)
    if s in ("true", "false"):
        return coerce_value(s == "true", kind)
    if s.startswith('"'):
        try:
            value = json.loads(s)
        except json.JSONDecodeError:
            raise KindError(f"bad text literal {s}") from None
        return coerce_value(value, kind)
    if s.startswith("("):
        if not s.endswith(")"):
            raise KindError(f"unterminated triple literal {s!r}")
        parts = s[1:-1].split(",")
        if len(parts) != 3:
            raise KindError(f"triple literal needs 3 components, got {len(parts)}")
        x, y, z = (_parse_number(p) for p in parts)
        if kind == ValueKind.POINT:
            return Point3(x, y, z)
        if kind in (ValueKind.VECTOR, ValueKind.ANY):
            return Vector3(x, y, z)
        raise KindError(f"{kind.value} port cannot accept a triple literal")
    try:
        as_int = int(s, 10)
    except ValueError:
        return coerce_value(_parse_number(s), kind)
    if kind == ValueKind.NUMBER:
        return float(as_int)
    return coerce_value(as_int, kind)


__all__ = [
    "KindError",
    "ValueKind",
    "accepts_value",
    "coerce_value",
    "format_literal",
    "kind_of",
    "parse_literal",
    "wire_compatible",
]
