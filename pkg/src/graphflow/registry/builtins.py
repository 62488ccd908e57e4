"""The built-in component set: descriptors plus evaluation functions.

Covers the eight stock categories: Params, Vector, Curve, Transform,
Sets, Maths, Surface, Analysis.
"""
from __future__ import annotations

import math

from graphflow.geometry import (
    WORLD_XY,
    Plane,
    Point3,
    Rotate,
    Translate,
    Vector3,
    area_properties,
    circle_curve,
    extrude,
    loft,
    polygon_curve,
    transform,
)

from .model import ComponentDescriptor, Evaluator, PortDescriptor, Registry, StateField
from .values import ValueKind

N = ValueKind.NUMBER
I = ValueKind.INTEGER
B = ValueKind.BOOLEAN
T = ValueKind.TEXT
V = ValueKind.VECTOR
P = ValueKind.POINT
PL = ValueKind.PLANE
C = ValueKind.CURVE
S = ValueKind.SOLID
ANY = ValueKind.ANY


def _in(index, name, description, kind, optional=True, default=None, access="item"):
    return PortDescriptor(index, name, description, kind, optional, default, access)


def _out(index, name, description, kind, note="single item"):
    return PortDescriptor(index, name, description, kind, data_structure_note=note)


def _eval_number_slider(state):
    return (float(state["value"]),)


def _eval_integer_slider(state):
    return (int(state["value"]),)


def _eval_unit_z(factor):
    return (Vector3(0.0, 0.0, factor),)


def _eval_construct_point(x, y, z):
    return (Point3(x, y, z),)


def _eval_construct_plane(origin, x_axis, y_axis):
    return (Plane.from_axes(origin, x_axis, y_axis),)


def _eval_circle(plane, radius):
    return (circle_curve(plane, radius),)


def _eval_polygon(plane, radius, sides):
    return (polygon_curve(plane, radius, sides),)


def _eval_move(geometry, motion):
    return (transform(geometry, Translate(motion)),)


def _eval_rotate(geometry, angle, plane):
    return (transform(geometry, Rotate(angle, plane)),)


def _eval_series(start, step, count):
    if count < 0:
        raise ValueError(f"series count must be >= 0, got {count}")
    return ([start + i * step for i in range(count)],)


def _eval_flatten(tree):
    return (tree.flattened(),)


def _eval_add(a, b):
    return (a + b,)


def _eval_subtract(a, b):
    return (a - b,)


def _eval_multiply(a, b):
    return (a * b,)


def _eval_divide(a, b):
    return (a / b,)


def _eval_power(base, exponent):
    return (math.pow(base, exponent),)


def _eval_expression(formula, x, y, z):
    # deferred import: the dsl package depends on this one
    from graphflow.dsl.expressions import evaluate_formula

    return (evaluate_formula(formula, {"x": x, "y": y, "z": z}),)


def _eval_extrude(base, direction, capped):
    return (extrude(base, direction, capped),)


def _eval_loft(bottom, top, capped):
    return (loft(bottom, top, capped),)


def _eval_area(geometry):
    return area_properties(geometry)


def builtin_registry() -> Registry:
    reg = Registry()

    def add(descriptor, mode, fn):
        reg.register(descriptor, Evaluator(mode, fn))

    def slider_state(kind, lo, hi, val):
        return (
            StateField("min", kind, lo, "Lower bound"),
            StateField("max", kind, hi, "Upper bound"),
            StateField("value", kind, val, "Current value"),
            StateField("decimals", I, 0 if kind is I else 3, "Digits kept after rounding"),
        )

    add(
        ComponentDescriptor(
            "params.number_slider",
            "Number Slider",
            "Slider",
            "Params",
            "Stateful slider producing one number between its minimum and maximum.",
            False,
            (),
            (_out(0, "Value", "Current slider value", N),),
            slider_state(N, 0.0, 10.0, 1.0),
        ),
        "source",
        _eval_number_slider,
    )
    add(
        ComponentDescriptor(
            "params.integer_slider",
            "Integer Slider",
            "Slider",
            "Params",
            "Stateful slider producing one whole number between its minimum and maximum.",
            False,
            (),
            (_out(0, "Value", "Current slider value", I),),
            slider_state(I, 0, 10, 1),
        ),
        "source",
        _eval_integer_slider,
    )
    add(
        ComponentDescriptor(
            "vector.unit_z",
            "Unit Z",
            "Z",
            "Vector",
            "Unit vector along the world z axis, scaled by a factor.",
            False,
            (_in(0, "Factor", "Length multiplier", N, default=1.0),),
            (_out(0, "Vector", "The scaled vector", V),),
        ),
        "item",
        _eval_unit_z,
    )
    add(
        ComponentDescriptor(
            "vector.construct_point",
            "Construct Point",
            "Pt",
            "Vector",
            "Point from x, y, and z coordinates.",
            False,
            (
                _in(0, "X", "X coordinate", N, default=0.0),
                _in(1, "Y", "Y coordinate", N, default=0.0),
                _in(2, "Z", "Z coordinate", N, default=0.0),
            ),
            (_out(0, "Point", "The point", P),),
        ),
        "item",
        _eval_construct_point,
    )
    add(
        ComponentDescriptor(
            "vector.construct_plane",
            "Construct Plane",
            "Plane",
            "Vector",
            "Plane from an origin point and two axis hints.",
            False,
            (
                _in(0, "Origin", "Plane origin", P, default=Point3(0.0, 0.0, 0.0)),
                _in(1, "X Axis", "Direction of the plane x axis", V, default=Vector3(1.0, 0.0, 0.0)),
                _in(2, "Y Axis", "Hint for the plane y axis", V, default=Vector3(0.0, 1.0, 0.0)),
            ),
            (_out(0, "Plane", "The constructed plane", PL),),
        ),
        "item",
        _eval_construct_plane,
    )
    add(
        ComponentDescriptor(
            "curve.circle",
            "Circle",
            "Cir",
            "Curve",
            "Circle on a plane, centered at the plane origin.",
            True,
            (
                _in(0, "Plane", "Base plane", PL, default=WORLD_XY),
                _in(1, "Radius", "Circle radius", N, default=1.0),
            ),
            (_out(0, "Circle", "The circle", C),),
        ),
        "item",
        _eval_circle,
    )
    add(
        ComponentDescriptor(
            "curve.polygon",
            "Polygon",
            "Pol",
            "Curve",
            "Closed regular polygon inscribed in a circle of the given radius.",
            True,
            (
                _in(0, "Plane", "Base plane", PL, default=WORLD_XY),
                _in(1, "Radius", "Distance from the center to each vertex", N, default=1.0),
                _in(2, "Sides", "Vertex count, at least 3", I, default=6),
            ),
            (_out(0, "Polygon", "The closed polyline", C),),
        ),
        "item",
        _eval_polygon,
    )
    add(
        ComponentDescriptor(
            "transform.move",
            "Move",
            "Move",
            "Transform",
            "Move geometry along a vector.",
            True,
            (
                _in(0, "Geometry", "Geometry to move", ANY, optional=False),
                _in(1, "Motion", "Translation vector", V, default=Vector3(0.0, 0.0, 0.0)),
            ),
            (_out(0, "Geometry", "Moved geometry", ANY, note="matches the input structure"),),
        ),
        "item",
        _eval_move,
    )
    add(
        ComponentDescriptor(
            "transform.rotate",
            "Rotate",
            "Rot",
            "Transform",
            "Rotate geometry around a plane normal by an angle in radians.",
            True,
            (
                _in(0, "Geometry", "Geometry to rotate", ANY, optional=False),
                _in(1, "Angle", "Rotation angle in radians", N, default=0.0),
                _in(2, "Plane", "Axis plane; rotation runs about its normal", PL, default=WORLD_XY),
            ),
            (_out(0, "Geometry", "Rotated geometry", ANY, note="matches the input structure"),),
        ),
        "item",
        _eval_rotate,
    )
    add(
        ComponentDescriptor(
            "sets.series",
            "Series",
            "Ser",
            "Sets",
            "Arithmetic progression: count numbers starting at start, stepping by step.",
            False,
            (
                _in(0, "Start", "First number", N, default=0.0),
                _in(1, "Step", "Increment between numbers", N, default=1.0),
                _in(2, "Count", "How many numbers", I, default=10),
            ),
            (_out(0, "Series", "The progression", N, note="list per evaluation"),),
        ),
        "item",
        _eval_series,
    )
    add(
        ComponentDescriptor(
            "sets.flatten_tree",
            "Flatten Tree",
            "Flat",
            "Sets",
            "Collapse every branch of a tree into a single branch, preserving order.",
            False,
            (_in(0, "Tree", "Tree to flatten", ANY, optional=False, access="list"),),
            (_out(0, "Tree", "Flattened tree", ANY, note="single branch {0}"),),
        ),
        "tree",
        _eval_flatten,
    )
    add(
        ComponentDescriptor(
            "maths.add",
            "Addition",
            "Add",
            "Maths",
            "Add two numbers.",
            False,
            (_in(0, "A", "First addend", N, default=0.0), _in(1, "B", "Second addend", N, default=0.0)),
            (_out(0, "Result", "A plus B", N),),
        ),
        "item",
        _eval_add,
    )
    add(
        ComponentDescriptor(
            "maths.subtract",
            "Subtraction",
            "Sub",
            "Maths",
            "Subtract B from A.",
            False,
            (_in(0, "A", "Minuend", N, default=0.0), _in(1, "B", "Subtrahend", N, default=0.0)),
            (_out(0, "Result", "A minus B", N),),
        ),
        "item",
        _eval_subtract,
    )
    add(
        ComponentDescriptor(
            "maths.multiply",
            "Multiplication",
            "Mul",
            "Maths",
            "Multiply two numbers.",
            False,
            (_in(0, "A", "First factor", N, default=1.0), _in(1, "B", "Second factor", N, default=1.0)),
            (_out(0, "Result", "A times B", N),),
        ),
        "item",
        _eval_multiply,
    )
    add(
        ComponentDescriptor(
            "maths.divide",
            "Division",
            "Div",
            "Maths",
            "Divide A by B.",
            False,
            (_in(0, "A", "Dividend", N, default=0.0), _in(1, "B", "Divisor", N, default=1.0)),
            (_out(0, "Result", "A divided by B", N),),
        ),
        "item",
        _eval_divide,
    )
    add(
        ComponentDescriptor(
            "maths.power",
            "Power",
            "Pow",
            "Maths",
            "Raise a base to an exponent.",
            False,
            (
                _in(0, "Base", "The base", N, default=1.0),
                _in(1, "Exponent", "The exponent", N, default=1.0),
            ),
            (_out(0, "Result", "Base raised to the exponent", N),),
        ),
        "item",
        _eval_power,
    )
    add(
        ComponentDescriptor(
            "maths.expression",
            "Expression",
            "Expr",
            "Maths",
            "Evaluate an arithmetic formula of x, y, and z.",
            False,
            (
                _in(
                    0,
                    "Formula",
                    "Formula over x, y, z with sin, cos, tan, sqrt, abs, floor, and pi",
                    T,
                    default="x",
                ),
                _in(1, "x", "Value bound to x", N, default=0.0),
                _in(2, "y", "Value bound to y", N, default=0.0),
                _in(3, "z", "Value bound to z", N, default=0.0),
            ),
            (_out(0, "Result", "The formula value", N),),
        ),
        "item",
        _eval_expression,
    )
    add(
        ComponentDescriptor(
            "surface.extrude",
            "Extrude",
            "Extr",
            "Surface",
            "Sweep a base curve along a direction vector into a solid.",
            True,
            (
                _in(0, "Base", "Curve to extrude", C, optional=False),
                _in(1, "Direction", "Sweep direction and length", V, default=Vector3(0.0, 0.0, 1.0)),
                _in(2, "Capped", "Close the ends into a watertight solid", B, default=True),
            ),
            (_out(0, "Solid", "Extruded solid", S),),
        ),
        "item",
        _eval_extrude,
    )
    add(
        ComponentDescriptor(
            "surface.loft",
            "Loft",
            "Loft",
            "Surface",
            "Ruled solid between two section curves.",
            True,
            (
                _in(0, "Bottom", "Lower section curve", C, optional=False),
                _in(1, "Top", "Upper section curve", C, optional=False),
                _in(2, "Capped", "Close the ends into a watertight solid", B, default=True),
            ),
            (_out(0, "Solid", "Lofted solid", S),),
        ),
        "item",
        _eval_loft,
    )
    add(
        ComponentDescriptor(
            "analysis.area",
            "Area",
            "Area",
            "Analysis",
            "Area and centroid of a closed curve or a solid's surface.",
            False,
            (_in(0, "Geometry", "Closed curve or solid", ANY, optional=False),),
            (
                _out(0, "Area", "Enclosed or surface area", N),
                _out(1, "Centroid", "Area centroid of the base region", P),
            ),
        ),
        "item",
        _eval_area,
    )
    return reg


__all__ = ["builtin_registry"]
