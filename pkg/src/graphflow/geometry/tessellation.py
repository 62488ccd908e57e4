"""Display meshing for curves and solids.

Curved profiles are sampled so the chord deviation stays within a caller
tolerance; straight profiles keep their exact vertices. Solid meshes are
closed, consistently wound, and suitable for volume checks against the
closed-form measurements in `ops`.
"""
from __future__ import annotations

import math

from .types import (
    Circle,
    Curve,
    Extrusion,
    GeometryError,
    Loft,
    Mesh,
    NonPositiveTolerance,
    Point3,
    Polyline,
    Solid,
    Vector3,
)

MIN_SEGMENTS = 8


def _require_tol(tol: float) -> None:
    if not (math.isfinite(tol) and tol > 0.0):
        raise NonPositiveTolerance(f"chord tolerance must be > 0, got {tol!r}")


def segment_count(radius: float, tol: float) -> int:
    """Segments needed so a circular arc's chord sags at most `tol`.

    Sagitta of one segment spanning angle a is r * (1 - cos(a / 2)).
    """
    _require_tol(tol)
    ratio = 1.0 - tol / radius
    if ratio <= -1.0:
        return MIN_SEGMENTS
    half_angle = math.acos(ratio)
    return max(MIN_SEGMENTS, math.ceil(math.pi / half_angle))


def _circle_ring(c: Circle, n: int) -> list[Point3]:
    step = 2.0 * math.pi / n
    return [c.point_at(i * step) for i in range(n)]


def tessellate_curve(c: Curve, tol: float) -> Mesh:
    """Vertex outline of a curve; no faces."""
    if isinstance(c, Circle):
        ring = _circle_ring(c, segment_count(c.radius, tol))
        return Mesh(tuple(ring), (), is_loop=True)
    _require_tol(tol)
    return Mesh(tuple(c.vertices), (), is_loop=c.closed)


def _fan(indices: list[int], flip: bool) -> list[tuple[int, int, int]]:
    """Triangle fan over a convex ring, anchored at the ring's first vertex."""
    apex = indices[0]
    tris = []
    for a, b in zip(indices[1:], indices[2:]):
        tris.append((apex, b, a) if flip else (apex, a, b))
    return tris


def _wall_triangles(bottom: list[int], top: list[int], wrap: bool) -> list[tuple[int, int, int]]:
    tris = []
    m = len(bottom)
    last = m if wrap else m - 1
    for i in range(last):
        j = (i + 1) % m
        tris.append((bottom[i], bottom[j], top[j]))
        tris.append((bottom[i], top[j], top[i]))
    return tris


def _solid_rings(s: Solid, tol: float) -> tuple[list[Point3], list[Point3], bool]:
    """(bottom ring, top ring, closed) with matching vertex counts."""
    if isinstance(s, Extrusion):
        if isinstance(s.base, Circle):
            ring = _circle_ring(s.base, segment_count(s.base.radius, tol))
        else:
            _require_tol(tol)
            ring = list(s.base.vertices)
        lifted = [v + s.direction for v in ring]
        closed = isinstance(s.base, Circle) or s.base.closed
        return ring, lifted, closed
    if isinstance(s.bottom, Circle) and isinstance(s.top, Circle):
        n = max(segment_count(s.bottom.radius, tol), segment_count(s.top.radius, tol))
        return _circle_ring(s.bottom, n), _circle_ring(s.top, n), True
    _require_tol(tol)
    return list(s.bottom.vertices), list(s.top.vertices), s.bottom.closed


def tessellate_solid(s: Solid, tol: float) -> Mesh:
    bottom, top, closed = _solid_rings(s, tol)
    m = len(bottom)
    vertices = tuple(bottom + top)
    bottom_idx = list(range(m))
    top_idx = list(range(m, 2 * m))
    triangles = _wall_triangles(bottom_idx, top_idx, wrap=closed)
    if s.capped:
        triangles.extend(_fan(bottom_idx, flip=True))
        triangles.extend(_fan(top_idx, flip=False))
    mesh = Mesh(vertices, tuple(triangles))
    if s.capped and mesh_volume(mesh) < 0.0:
        mesh = Mesh(vertices, tuple((a, c, b) for a, b, c in mesh.triangles))
    return mesh


def tessellate(g, tol: float) -> Mesh:
    if isinstance(g, (Circle, Polyline)):
        return tessellate_curve(g, tol)
    if isinstance(g, (Extrusion, Loft)):
        return tessellate_solid(g, tol)
    raise GeometryError(f"cannot tessellate value of type {type(g).__name__}")


# ---------------------------------------------------------------------------
# Mesh measurements


def is_watertight(mesh: Mesh) -> bool:
    """True when every edge is shared by exactly two consistently wound faces."""
    if not mesh.triangles:
        return False
    directed: set[tuple[int, int]] = set()
    for a, b, c in mesh.triangles:
        for edge in ((a, b), (b, c), (c, a)):
            if edge in directed:
                return False
            directed.add(edge)
    return all((b, a) in directed for a, b in directed)


def mesh_volume(mesh: Mesh) -> float:
    """Signed enclosed volume; positive when triangles wind outward."""
    total = 0.0
    for a, b, c in mesh.triangles:
        va = mesh.vertices[a].as_vector()
        vb = mesh.vertices[b].as_vector()
        vc = mesh.vertices[c].as_vector()
        total += va.dot(vb.cross(vc))
    return total / 6.0


def mesh_surface_area(mesh: Mesh) -> float:
    total = 0.0
    for a, b, c in mesh.triangles:
        pa, pb, pc = mesh.vertices[a], mesh.vertices[b], mesh.vertices[c]
        total += 0.5 * (pb - pa).cross(pc - pa).length()
    return total


def _triangle_normal(a: Point3, b: Point3, c: Point3) -> Vector3:
    n = (b - a).cross(c - a)
    return Vector3(0.0, 0.0, 0.0) if n.is_zero() else n.normalized()


def to_ascii_stl(mesh: Mesh, name: str = "model") -> str:
    """ASCII STL document for a faceted mesh."""
    if not mesh.triangles:
        raise GeometryError("cannot export a mesh with no faces")
    lines = [f"solid {name}"]
    for a, b, c in mesh.triangles:
        pa, pb, pc = mesh.vertices[a], mesh.vertices[b], mesh.vertices[c]
        n = _triangle_normal(pa, pb, pc)
        lines.append(f"  facet normal {n.x:.9e} {n.y:.9e} {n.z:.9e}")
        lines.append("    outer loop")
        for p in (pa, pb, pc):
            lines.append(f"      vertex {p.x:.9e} {p.y:.9e} {p.z:.9e}")
        lines.append("    endloop")
        lines.append("  endfacet")
    lines.append(f"endsolid {name}")
    return "\n".join(lines) + "\n"


__all__ = [
    "MIN_SEGMENTS",
    "is_watertight",
    "mesh_surface_area",
    "mesh_volume",
    "segment_count",
    "tessellate",
    "tessellate_curve",
    "tessellate_solid",
    "to_ascii_stl",
]
