"""Mesh wire format shared by the HTTP API and the CLI."""
from __future__ import annotations

from graphflow.engine import WorkflowGraph, preview_geometry
from graphflow.geometry.types import Mesh, Point3


def mesh_json(mesh: Mesh) -> dict:
    return {
        "vertices": [[v.x, v.y, v.z] for v in mesh.vertices],
        "triangles": [list(t) for t in mesh.triangles],
    }


def meshes_payload(graph: WorkflowGraph, tol: float) -> list[dict]:
    return [
        {"node_id": node_id, **mesh_json(mesh)}
        for node_id, mesh in preview_geometry(graph, tol)
    ]


def faceted(mesh: Mesh) -> Mesh:
    """Fan-fill a faceless ring (a tessellated closed curve) so triangle-only
    exports such as STL have something to write."""
    if mesh.triangles or len(mesh.vertices) < 3:
        return mesh
    fan = tuple((0, i, i + 1) for i in range(1, len(mesh.vertices) - 1))
    return Mesh(mesh.vertices, fan)


def merge_meshes(meshes: list[Mesh]) -> Mesh:
    vertices: list[Point3] = []
    triangles: list[tuple[int, int, int]] = []
    for mesh in meshes:
        base = len(vertices)
        vertices.extend(mesh.vertices)
        triangles.extend((a + base, b + base, c + base) for a, b, c in mesh.triangles)
    return Mesh(tuple(vertices), tuple(triangles))


__all__ = ["faceted", "mesh_json", "meshes_payload", "merge_meshes"]
