"""Display meshing checks: chord deviation, watertightness, mesh volume."""
from __future__ import annotations

import math
from collections import Counter

import pytest

from graphflow.geometry import (
    MIN_SEGMENTS,
    WORLD_XY,
    GeometryError,
    Mesh,
    NonPositiveTolerance,
    Plane,
    Point3,
    Polyline,
    Vector3,
    circle_curve,
    extrude,
    is_watertight,
    loft,
    mesh_surface_area,
    mesh_volume,
    polygon_curve,
    segment_count,
    tessellate,
    to_ascii_stl,
)


def plane_at_z(z: float) -> Plane:
    return Plane(Point3(0.0, 0.0, z), Vector3(1.0, 0.0, 0.0), Vector3(0.0, 1.0, 0.0))


# --- oracles -----------------------------------------------------------


def edge_use_counts(mesh: Mesh) -> Counter:
    """Undirected edge -> number of triangles using it."""
    counts: Counter = Counter()
    for a, b, c in mesh.triangles:
        for e in ((a, b), (b, c), (c, a)):
            counts[frozenset(e)] += 1
    return counts


def tetra_volume_sum(mesh: Mesh) -> float:
    """Signed volume by summing origin-anchored tetrahedra, no shared code."""
    total = 0.0
    for a, b, c in mesh.triangles:
        pa, pb, pc = mesh.vertices[a], mesh.vertices[b], mesh.vertices[c]
        det = (
            pa.x * (pb.y * pc.z - pb.z * pc.y)
            - pa.y * (pb.x * pc.z - pb.z * pc.x)
            + pa.z * (pb.x * pc.y - pb.y * pc.x)
        )
        total += det
    return total / 6.0


def max_chord_deviation(mesh: Mesh, radius: float) -> float:
    """Largest sag of any loop chord below the circle of `radius` at origin."""
    worst = 0.0
    n = len(mesh.vertices)
    for i in range(n):
        a = mesh.vertices[i]
        b = mesh.vertices[(i + 1) % n]
        mid = Point3((a.x + b.x) / 2.0, (a.y + b.y) / 2.0, (a.z + b.z) / 2.0)
        worst = max(worst, radius - mid.distance_to(Point3(0.0, 0.0, a.z)))
    return worst


# --- segment counts ----------------------------------------------------


def test_segment_count_formula():
    r, tol = 20.0, 0.5
    n = segment_count(r, tol)
    assert n >= MIN_SEGMENTS
    assert n >= math.pi / math.acos(1.0 - tol / r)


def test_segment_count_floors_at_minimum():
    assert segment_count(1.0, 100.0) == MIN_SEGMENTS
    assert segment_count(1.0, 2.5) == MIN_SEGMENTS


def test_segment_count_rejects_bad_tolerance():
    with pytest.raises(NonPositiveTolerance):
        segment_count(1.0, 0.0)
    with pytest.raises(NonPositiveTolerance):
        segment_count(1.0, -1e-3)


# --- curve meshes ------------------------------------------------------


def test_circle_mesh_is_closed_loop_within_tolerance():
    tol = 0.5
    mesh = tessellate(circle_curve(WORLD_XY, 20.0), tol)
    assert mesh.is_loop
    assert not mesh.triangles
    assert len(mesh.vertices) >= MIN_SEGMENTS
    assert max_chord_deviation(mesh, 20.0) <= tol + 1e-12


def test_polygon_mesh_keeps_exact_vertices():
    sq = polygon_curve(WORLD_XY, 10.0, 4)
    mesh = tessellate(sq, 0.01)
    assert mesh.is_loop
    assert mesh.vertices == sq.vertices


def test_open_polyline_mesh_is_not_a_loop():
    line = Polyline((Point3(0, 0, 0), Point3(1, 0, 0), Point3(2, 1, 0)), closed=False)
    mesh = tessellate(line, 0.01)
    assert not mesh.is_loop
    assert mesh.vertices == line.vertices


# --- solid meshes ------------------------------------------------------


def test_cylinder_mesh_watertight_and_volume_close():
    solid = extrude(circle_curve(WORLD_XY, 100.0), Vector3(0.0, 0.0, 10.0), True)
    mesh = tessellate(solid, 0.01)
    counts = edge_use_counts(mesh)
    assert all(v == 2 for v in counts.values())
    assert is_watertight(mesh)
    analytic = math.pi * 100.0 * 100.0 * 10.0
    assert abs(tetra_volume_sum(mesh) - analytic) / analytic < 0.01


def test_square_prism_mesh_is_exact():
    prism = extrude(polygon_curve(WORLD_XY, math.sqrt(2.0), 4), Vector3(0, 0, 3.0), True)
    for tol in (0.5, 0.01, 1e-6):
        mesh = tessellate(prism, tol)
        assert len(mesh.vertices) == 8
        assert mesh_volume(mesh) == pytest.approx(12.0, rel=1e-9)
        assert tetra_volume_sum(mesh) == pytest.approx(12.0, rel=1e-9)
        assert is_watertight(mesh)


def test_mesh_volume_converges_with_tolerance():
    solid = loft(circle_curve(WORLD_XY, 20.0), circle_curve(plane_at_z(7.0), 10.0), True)
    analytic = math.pi * 7.0 / 3.0 * (400.0 + 200.0 + 100.0)
    errs = [abs(tetra_volume_sum(tessellate(solid, tol)) - analytic) for tol in (1.0, 0.1, 0.001)]
    assert errs[0] > errs[1] > errs[2]
    assert errs[2] / analytic < 1e-4


def test_frustum_mesh_watertight():
    solid = loft(circle_curve(WORLD_XY, 20.0), circle_curve(plane_at_z(7.0), 10.0), True)
    counts = edge_use_counts(tessellate(solid, 0.05))
    assert counts and all(v == 2 for v in counts.values())


def test_uncapped_solid_mesh_is_open():
    solid = extrude(circle_curve(WORLD_XY, 5.0), Vector3(0, 0, 2.0), False)
    mesh = tessellate(solid, 0.1)
    assert not is_watertight(mesh)
    counts = edge_use_counts(mesh)
    assert any(v == 1 for v in counts.values())  # boundary rims


def test_downward_extrusion_keeps_outward_orientation():
    solid = extrude(circle_curve(WORLD_XY, 2.0), Vector3(0.0, 0.0, -5.0), True)
    mesh = tessellate(solid, 0.01)
    assert is_watertight(mesh)
    assert mesh_volume(mesh) > 0.0


def test_mesh_surface_area_tracks_analytic_cylinder():
    r, h = 4.0, 9.0
    solid = extrude(circle_curve(WORLD_XY, r), Vector3(0.0, 0.0, h), True)
    mesh = tessellate(solid, 1e-4)
    analytic = 2.0 * math.pi * r * r + 2.0 * math.pi * r * h
    assert abs(mesh_surface_area(mesh) - analytic) / analytic < 1e-3


def test_mesh_volume_agrees_with_independent_sum():
    solid = loft(polygon_curve(WORLD_XY, 10.0, 6), polygon_curve(plane_at_z(5.0), 3.0, 6), True)
    mesh = tessellate(solid, 0.01)
    assert mesh_volume(mesh) == pytest.approx(tetra_volume_sum(mesh), rel=1e-12)


# --- stl ---------------------------------------------------------------


def test_stl_document_shape():
    prism = extrude(polygon_curve(WORLD_XY, 1.0, 4), Vector3(0, 0, 1.0), True)
    mesh = tessellate(prism, 0.1)
    doc = to_ascii_stl(mesh, name="prism")
    lines = doc.splitlines()
    assert lines[0] == "solid prism"
    assert lines[-1] == "endsolid prism"
    assert sum(1 for ln in lines if ln.strip().startswith("facet normal")) == len(mesh.triangles)
    assert sum(1 for ln in lines if ln.strip().startswith("vertex")) == 3 * len(mesh.triangles)


def test_stl_rejects_faceless_mesh():
    mesh = tessellate(circle_curve(WORLD_XY, 1.0), 0.1)
    with pytest.raises(GeometryError):
        to_ascii_stl(mesh)
