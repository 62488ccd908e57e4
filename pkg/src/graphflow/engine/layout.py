"""Automatic canvas placement by dataflow depth."""
from __future__ import annotations

from .graph import WorkflowGraph

COLUMN_PITCH = 240.0
ROW_PITCH = 120.0


def auto_layout(graph: WorkflowGraph) -> None:
    """Place nodes on a grid: column = longest upstream path, row = insertion order."""
    depth: dict[str, int] = {}
    for node_id in graph.evaluation_order():
        preds = graph.predecessors(node_id)
        depth[node_id] = 1 + max((depth[p] for p in preds), default=-1)
    rows: dict[int, int] = {}
    for node in graph.nodes():
        d = depth[node.node_id]
        row = rows.get(d, 0)
        rows[d] = row + 1
        node.position = (d * COLUMN_PITCH, row * ROW_PITCH)


__all__ = ["COLUMN_PITCH", "ROW_PITCH", "auto_layout"]
