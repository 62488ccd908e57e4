"""Meshes for every previewed node of an evaluated graph."""
from __future__ import annotations

from graphflow.geometry import Circle, Extrusion, Loft, Mesh, Polyline, tessellate

from .errors import NotEvaluated
from .graph import WorkflowGraph

_RENDERABLE = (Circle, Polyline, Extrusion, Loft)


def preview_geometry(graph: WorkflowGraph, tol: float) -> list[tuple[str, Mesh]]:
    """Tessellate the geometry outputs of preview-enabled nodes."""
    if not graph.evaluated:
        raise NotEvaluated("evaluate the graph before requesting meshes")
    meshes: list[tuple[str, Mesh]] = []
    for node in graph.nodes():
        if not node.preview:
            continue
        for tree in graph.cached_outputs(node.node_id) or ():
            for value in tree.all_values():
                if isinstance(value, _RENDERABLE):
                    meshes.append((node.node_id, tessellate(value, tol)))
    return meshes


__all__ = ["preview_geometry"]
