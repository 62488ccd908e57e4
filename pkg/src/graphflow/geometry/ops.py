"""Constructors, rigid motions, and measurements for the primitive set.

Every measurement here is closed-form, so results can serve as exact
oracles for the display tessellation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .types import (
    COORD_TOL,
    Circle,
    Curve,
    Extrusion,
    GeometryError,
    IncompatibleCurves,
    Loft,
    NonPositiveRadius,
    OpenCurve,
    Plane,
    Point3,
    Polyline,
    Solid,
    TooFewSides,
    UncappedSolid,
    Vector3,
    curve_is_closed,
)


def circle_curve(plane: Plane, radius: float) -> Circle:
    """Circle of the given radius centered at the plane origin."""
    if not (math.isfinite(radius) and radius > 0.0):
        raise NonPositiveRadius(f"circle radius must be > 0, got {radius!r}")
    return Circle(plane, float(radius))


def polygon_curve(plane: Plane, circumradius: float, sides: int) -> Polyline:
    """Closed regular polygon, counterclockwise about the plane normal.

    Vertex 0 sits at origin + circumradius * x_axis.
    """
    if not (math.isfinite(circumradius) and circumradius > 0.0):
        raise NonPositiveRadius(f"polygon circumradius must be > 0, got {circumradius!r}")
    if sides < 3:
        raise TooFewSides(f"polygon needs at least 3 sides, got {sides}")
    step = 2.0 * math.pi / sides
    verts = tuple(
        plane.point_at(circumradius * math.cos(i * step), circumradius * math.sin(i * step))
        for i in range(sides)
    )
    return Polyline(verts, closed=True)


# ---------------------------------------------------------------------------
# Rigid motions


@dataclass(frozen=True)
class Translate:
    offset: Vector3


@dataclass(frozen=True)
class Rotate:
    """Rotation by `angle` radians about the axis plane's normal through its origin."""

    angle: float
    axis_plane: Plane


Motion = Translate | Rotate


def _rotate_vector(v: Vector3, axis: Vector3, angle: float) -> Vector3:
    # Rodrigues' formula; axis must be unit length.
    c, s = math.cos(angle), math.sin(angle)
    return v * c + axis.cross(v) * s + axis * (axis.dot(v) * (1.0 - c))


def _move_point(p: Point3, motion: Motion) -> Point3:
    if isinstance(motion, Translate):
        return p + motion.offset
    axis = motion.axis_plane.normal.normalized()
    center = motion.axis_plane.origin
    return center + _rotate_vector(p - center, axis, motion.angle)


def _move_vector(v: Vector3, motion: Motion) -> Vector3:
    if isinstance(motion, Translate):
        return v
    return _rotate_vector(v, motion.axis_plane.normal.normalized(), motion.angle)


def transform(g, motion: Motion):
    """Apply a rigid motion; the argument's type is preserved."""
    if isinstance(g, Point3):
        return _move_point(g, motion)
    if isinstance(g, Vector3):
        return _move_vector(g, motion)
    if isinstance(g, Plane):
        return Plane(
            _move_point(g.origin, motion),
            _move_vector(g.x_axis, motion).normalized(),
            _move_vector(g.y_axis, motion).normalized(),
        )
    if isinstance(g, Circle):
        return Circle(transform(g.plane, motion), g.radius)
    if isinstance(g, Polyline):
        return Polyline(tuple(_move_point(v, motion) for v in g.vertices), g.closed)
    if isinstance(g, Extrusion):
        return Extrusion(transform(g.base, motion), _move_vector(g.direction, motion), g.capped)
    if isinstance(g, Loft):
        return Loft(transform(g.bottom, motion), transform(g.top, motion), g.capped)
    raise GeometryError(f"cannot transform value of type {type(g).__name__}")


def extrude(base: Curve, direction: Vector3, capped: bool) -> Extrusion:
    return Extrusion(base, direction, capped)


def loft(bottom: Curve, top: Curve, capped: bool) -> Loft:
    return Loft(bottom, top, capped)


# ---------------------------------------------------------------------------
# Measurements


def curve_plane(c: Curve) -> Plane:
    """Supporting plane of a closed planar curve (raises if non-planar)."""
    if isinstance(c, Circle):
        return c.plane
    verts = c.vertices
    origin = verts[0]
    x_hint = None
    for v in verts[1:]:
        if not (v - origin).is_zero():
            x_hint = v - origin
            break
    if x_hint is None:
        raise GeometryError("polyline vertices are coincident")
    y_hint = None
    x_unit = x_hint.normalized()
    for v in verts[1:]:
        d = v - origin
        rej = d - x_unit * d.dot(x_unit)
        if not rej.is_zero():
            y_hint = d
            break
    if y_hint is None:
        raise GeometryError("polyline vertices are collinear")
    plane = Plane.from_axes(origin, x_hint, y_hint)
    span = max(origin.distance_to(v) for v in verts) or 1.0
    normal = plane.normal
    for v in verts:
        if abs((v - origin).dot(normal)) > COORD_TOL * max(1.0, span):
            raise GeometryError("polyline is not planar")
    return plane


def _polygon_signed_area_centroid(uv: list[tuple[float, float]]) -> tuple[float, float, float]:
    """Shoelace signed area and area centroid of a closed 2D polygon."""
    a2 = 0.0
    cx = 0.0
    cy = 0.0
    n = len(uv)
    for i in range(n):
        x0, y0 = uv[i]
        x1, y1 = uv[(i + 1) % n]
        w = x0 * y1 - x1 * y0
        a2 += w
        cx += (x0 + x1) * w
        cy += (y0 + y1) * w
    if a2 == 0.0:
        raise GeometryError("polygon encloses zero area")
    return 0.5 * a2, cx / (3.0 * a2), cy / (3.0 * a2)


def _closed_curve_area_centroid(c: Curve) -> tuple[float, Point3]:
    if isinstance(c, Circle):
        return math.pi * c.radius * c.radius, c.center
    if not c.closed:
        raise OpenCurve("area requires a closed curve")
    plane = curve_plane(c)
    uv = [plane.project_uv(v) for v in c.vertices]
    signed, cu, cv = _polygon_signed_area_centroid(uv)
    return abs(signed), plane.point_at(cu, cv)


def _curve_perimeter(c: Curve) -> float:
    if isinstance(c, Circle):
        return 2.0 * math.pi * c.radius
    return sum(a.distance_to(b) for a, b in c.segments())


def solid_base_curve(s: Solid) -> Curve:
    return s.base if isinstance(s, Extrusion) else s.bottom


def _extrusion_lateral_area(s: Extrusion) -> float:
    d = s.direction
    if isinstance(s.base, Polyline):
        # Side faces are parallelograms regardless of obliquity.
        return sum((b - a).cross(d).length() for a, b in s.base.segments())
    n = s.base.plane.normal
    lateral = d - n * d.dot(n)
    if not lateral.is_zero(COORD_TOL * max(1.0, d.length())):
        raise GeometryError("lateral area of an oblique circular extrusion is not closed-form")
    return 2.0 * math.pi * s.base.radius * abs(d.dot(n))


def _loft_lateral_area(s: Loft) -> float:
    if isinstance(s.bottom, Circle) and isinstance(s.top, Circle):
        axis = s.top.center - s.bottom.center
        n = s.bottom.plane.normal
        off = axis - n * axis.dot(n)
        if not off.is_zero(COORD_TOL * max(1.0, axis.length())):
            raise GeometryError("lateral area of a non-coaxial circle loft is not closed-form")
        h = abs(axis.dot(n))
        r1, r2 = s.bottom.radius, s.top.radius
        return math.pi * (r1 + r2) * math.hypot(h, r1 - r2)
    bot = s.bottom.vertices
    top = s.top.vertices
    area = 0.0
    m = len(bot)
    for i in range(m):
        j = (i + 1) % m
        # Ruled wall quad split along (bot[i], top[j]); matches tessellation.
        area += 0.5 * (bot[j] - bot[i]).cross(top[j] - bot[i]).length()
        area += 0.5 * (top[j] - bot[i]).cross(top[i] - bot[i]).length()
    return area


def area_properties(g) -> tuple[float, Point3]:
    """(area, centroid).

    Closed curves: enclosed planar area and its centroid. Solids: total
    surface area; the centroid reported is the base region's.
    """
    if isinstance(g, (Circle, Polyline)):
        return _closed_curve_area_centroid(g)
    if isinstance(g, Extrusion):
        base_area, base_centroid = _closed_curve_area_centroid(g.base)
        caps = 2.0 * base_area if g.capped else 0.0
        return caps + _extrusion_lateral_area(g), base_centroid
    if isinstance(g, Loft):
        bottom_area, base_centroid = _closed_curve_area_centroid(g.bottom)
        top_area, _ = _closed_curve_area_centroid(g.top)
        caps = bottom_area + top_area if g.capped else 0.0
        return caps + _loft_lateral_area(g), base_centroid
    raise GeometryError(f"area is not defined for {type(g).__name__}")


def _loft_section_planes(s: Loft) -> tuple[Plane, Plane]:
    if isinstance(s.bottom, Circle):
        return s.bottom.plane, s.top.plane  # type: ignore[union-attr]
    return curve_plane(s.bottom), curve_plane(s.top)


def volume(s: Solid) -> float:
    """Enclosed volume of a capped solid."""
    if not s.capped:
        raise UncappedSolid("volume requires a capped solid")
    if isinstance(s, Extrusion):
        base_area, _ = _closed_curve_area_centroid(s.base)
        n = curve_plane(s.base).normal
        return base_area * abs(s.direction.dot(n))
    p0, p1 = _loft_section_planes(s)
    n = p0.normal
    if not n.cross(p1.normal).is_zero():
        raise IncompatibleCurves("loft volume requires parallel section planes")
    h = abs((p1.origin - p0.origin).dot(n))
    if isinstance(s.bottom, Circle) and isinstance(s.top, Circle):
        r1, r2 = s.bottom.radius, s.top.radius
        return math.pi * h / 3.0 * (r1 * r1 + r1 * r2 + r2 * r2)
    # Cross-section area of a ruled polyline loft is quadratic in the
    # interpolation parameter, so Simpson's rule integrates it exactly.
    bot = s.bottom.vertices  # type: ignore[union-attr]
    top = s.top.vertices  # type: ignore[union-attr]
    uv0 = [p0.project_uv(v) for v in bot]
    uv1 = [p0.project_uv(v) for v in top]
    uvm = [((a + c) * 0.5, (b + d) * 0.5) for (a, b), (c, d) in zip(uv0, uv1)]
    a0 = abs(_polygon_signed_area_centroid(uv0)[0])
    a1 = abs(_polygon_signed_area_centroid(uv1)[0])
    am = abs(_polygon_signed_area_centroid(uvm)[0])
    return h / 6.0 * (a0 + 4.0 * am + a1)


def solid_is_capped(s: Solid) -> bool:
    return s.capped


__all__ = [
    "Motion",
    "Rotate",
    "Translate",
    "area_properties",
    "circle_curve",
    "curve_is_closed",
    "curve_plane",
    "extrude",
    "loft",
    "polygon_curve",
    "solid_base_curve",
    "transform",
    "volume",
]
