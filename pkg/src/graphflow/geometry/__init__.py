"""Closed-form parametric geometry: primitives, rigid motions, meshing."""
from .ops import (
    Motion,
    Rotate,
    Translate,
    area_properties,
    circle_curve,
    curve_plane,
    extrude,
    loft,
    polygon_curve,
    solid_base_curve,
    transform,
    volume,
)
from .tessellation import (
    MIN_SEGMENTS,
    is_watertight,
    mesh_surface_area,
    mesh_volume,
    segment_count,
    tessellate,
    tessellate_curve,
    tessellate_solid,
    to_ascii_stl,
)
from .types import (
    COORD_TOL,
    MEASURE_RTOL,
    WORLD_XY,
    WORLD_XZ,
    WORLD_YZ,
    Circle,
    Curve,
    Extrusion,
    GeometryError,
    IncompatibleCurves,
    Loft,
    Mesh,
    NonPositiveRadius,
    NonPositiveTolerance,
    OpenCurve,
    OpenCurveCap,
    Plane,
    Point3,
    Polyline,
    Solid,
    TooFewSides,
    UncappedSolid,
    Vector3,
    ZeroDirection,
    curve_is_closed,
)

__all__ = [
    "COORD_TOL",
    "Circle",
    "Curve",
    "Extrusion",
    "GeometryError",
    "IncompatibleCurves",
    "Loft",
    "MEASURE_RTOL",
    "MIN_SEGMENTS",
    "Mesh",
    "Motion",
    "NonPositiveRadius",
    "NonPositiveTolerance",
    "OpenCurve",
    "OpenCurveCap",
    "Plane",
    "Point3",
    "Polyline",
    "Rotate",
    "Solid",
    "TooFewSides",
    "Translate",
    "UncappedSolid",
    "Vector3",
    "WORLD_XY",
    "WORLD_XZ",
    "WORLD_YZ",
    "ZeroDirection",
    "area_properties",
    "circle_curve",
    "curve_is_closed",
    "curve_plane",
    "extrude",
    "is_watertight",
    "loft",
    "mesh_surface_area",
    "mesh_volume",
    "polygon_curve",
    "segment_count",
    "solid_base_curve",
    "tessellate",
    "tessellate_curve",
    "tessellate_solid",
    "to_ascii_stl",
    "transform",
    "volume",
]
