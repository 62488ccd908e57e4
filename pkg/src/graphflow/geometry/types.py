"""Core geometric value types.

Everything here is immutable after construction; all operations on these
types are pure functions, so values can be shared freely across threads
and cached without copying.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

COORD_TOL = 1e-9  # absolute tolerance for coordinates
MEASURE_RTOL = 1e-9  # relative tolerance for areas/volumes


class GeometryError(Exception):
    """Base class for geometry construction and measurement failures."""


class NonPositiveRadius(GeometryError):
    pass


class TooFewSides(GeometryError):
    pass


class ZeroDirection(GeometryError):
    pass


class OpenCurveCap(GeometryError):
    pass


class IncompatibleCurves(GeometryError):
    pass


class OpenCurve(GeometryError):
    pass


class UncappedSolid(GeometryError):
    pass


class NonPositiveTolerance(GeometryError):
    pass


def _require_finite(name: str, *values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise GeometryError(f"{name} has non-finite component {v!r}")


@dataclass(frozen=True)
class Vector3:
    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        _require_finite("Vector3", self.x, self.y, self.z)

    def __add__(self, other: "Vector3") -> "Vector3":
        return Vector3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Vector3") -> "Vector3":
        return Vector3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __mul__(self, s: float) -> "Vector3":
        return Vector3(self.x * s, self.y * s, self.z * s)

    __rmul__ = __mul__

    def __neg__(self) -> "Vector3":
        return Vector3(-self.x, -self.y, -self.z)

    def dot(self, other: "Vector3") -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: "Vector3") -> "Vector3":
        return Vector3(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def length(self) -> float:
        return math.sqrt(self.dot(self))

    def normalized(self) -> "Vector3":
        n = self.length()
        if n == 0.0:
            raise ZeroDirection("cannot normalize a zero vector")
        return Vector3(self.x / n, self.y / n, self.z / n)

    def is_zero(self, tol: float = COORD_TOL) -> bool:
        return self.length() <= tol


@dataclass(frozen=True)
class Point3:
    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        _require_finite("Point3", self.x, self.y, self.z)

    def __add__(self, v: Vector3) -> "Point3":
        return Point3(self.x + v.x, self.y + v.y, self.z + v.z)

    def __sub__(self, other: "Point3") -> Vector3:
        return Vector3(self.x - other.x, self.y - other.y, self.z - other.z)

    def as_vector(self) -> Vector3:
        return Vector3(self.x, self.y, self.z)

    def distance_to(self, other: "Point3") -> float:
        return (self - other).length()


@dataclass(frozen=True)
class Plane:
    """Oriented frame: origin plus unit, mutually orthogonal x/y axes."""

    origin: Point3
    x_axis: Vector3
    y_axis: Vector3

    def __post_init__(self) -> None:
        if abs(self.x_axis.length() - 1.0) > COORD_TOL:
            raise GeometryError("plane x_axis must be unit length")
        if abs(self.y_axis.length() - 1.0) > COORD_TOL:
            raise GeometryError("plane y_axis must be unit length")
        if abs(self.x_axis.dot(self.y_axis)) > COORD_TOL:
            raise GeometryError("plane axes must be orthogonal")

    @property
    def normal(self) -> Vector3:
        return self.x_axis.cross(self.y_axis)

    def point_at(self, u: float, v: float) -> Point3:
        return self.origin + self.x_axis * u + self.y_axis * v

    def project_uv(self, p: Point3) -> tuple[float, float]:
        d = p - self.origin
        return d.dot(self.x_axis), d.dot(self.y_axis)

    @staticmethod
    def from_axes(origin: Point3, x_hint: Vector3, y_hint: Vector3) -> "Plane":
        """Build a plane from possibly non-unit, non-orthogonal axis hints.

        The x axis follows x_hint exactly; the y axis is y_hint with its
        x component removed (Gram-Schmidt).
        """
        if x_hint.is_zero():
            raise ZeroDirection("plane x axis hint is zero")
        x = x_hint.normalized()
        y_raw = y_hint - x * y_hint.dot(x)
        if y_raw.is_zero():
            raise ZeroDirection("plane axis hints are parallel")
        return Plane(origin, x, y_raw.normalized())


WORLD_XY = Plane(Point3(0.0, 0.0, 0.0), Vector3(1.0, 0.0, 0.0), Vector3(0.0, 1.0, 0.0))
WORLD_YZ = Plane(Point3(0.0, 0.0, 0.0), Vector3(0.0, 1.0, 0.0), Vector3(0.0, 0.0, 1.0))
WORLD_XZ = Plane(Point3(0.0, 0.0, 0.0), Vector3(1.0, 0.0, 0.0), Vector3(0.0, 0.0, 1.0))


@dataclass(frozen=True)
class Circle:
    plane: Plane
    radius: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise NonPositiveRadius(f"circle radius must be > 0, got {self.radius!r}")

    @property
    def center(self) -> Point3:
        return self.plane.origin

    def point_at(self, angle: float) -> Point3:
        return self.plane.point_at(self.radius * math.cos(angle), self.radius * math.sin(angle))


@dataclass(frozen=True)
class Polyline:
    vertices: tuple[Point3, ...]
    closed: bool

    def __post_init__(self) -> None:
        if self.closed:
            distinct = {(v.x, v.y, v.z) for v in self.vertices}
            if len(distinct) < 3:
                raise GeometryError("closed polyline needs at least 3 distinct vertices")
        elif len(self.vertices) < 2:
            raise GeometryError("polyline needs at least 2 vertices")

    def segments(self) -> list[tuple[Point3, Point3]]:
        pairs = list(zip(self.vertices, self.vertices[1:]))
        if self.closed:
            pairs.append((self.vertices[-1], self.vertices[0]))
        return pairs


Curve = Circle | Polyline


def curve_is_closed(c: Curve) -> bool:
    return True if isinstance(c, Circle) else c.closed


@dataclass(frozen=True)
class Extrusion:
    base: Curve
    direction: Vector3
    capped: bool

    def __post_init__(self) -> None:
        if self.direction.is_zero():
            raise ZeroDirection("extrusion direction must be nonzero")
        if self.capped and not curve_is_closed(self.base):
            raise OpenCurveCap("capped extrusion requires a closed base curve")


@dataclass(frozen=True)
class Loft:
    bottom: Curve
    top: Curve
    capped: bool

    def __post_init__(self) -> None:
        if isinstance(self.bottom, Circle) != isinstance(self.top, Circle):
            raise IncompatibleCurves("loft sections must both be circles or both polylines")
        if isinstance(self.bottom, Polyline) and isinstance(self.top, Polyline):
            if not (self.bottom.closed and self.top.closed):
                raise IncompatibleCurves("lofted polylines must be closed")
            if len(self.bottom.vertices) != len(self.top.vertices):
                raise IncompatibleCurves("lofted polylines must have equal vertex counts")


Solid = Extrusion | Loft


@dataclass(frozen=True)
class Mesh:
    """Indexed triangle mesh; `triangles` may be empty for curve outlines."""

    vertices: tuple[Point3, ...]
    triangles: tuple[tuple[int, int, int], ...]
    is_loop: bool = field(default=False)  # vertices form a closed outline, no faces

    def __post_init__(self) -> None:
        n = len(self.vertices)
        for tri in self.triangles:
            a, b, c = tri
            if not (0 <= a < n and 0 <= b < n and 0 <= c < n):
                raise GeometryError(f"triangle {tri} references a missing vertex")
            if _triangle_area(self.vertices[a], self.vertices[b], self.vertices[c]) <= 0.0:
                raise GeometryError(f"triangle {tri} is degenerate")


def _triangle_area(a: Point3, b: Point3, c: Point3) -> float:
    return 0.5 * (b - a).cross(c - a).length()
