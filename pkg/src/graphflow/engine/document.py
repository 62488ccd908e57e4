"""Graph documents: a stable JSON shape for saving and loading."""
from __future__ import annotations

import json

from graphflow.registry.model import Registry
from graphflow.registry.values import KindError, format_literal, parse_literal

from .errors import EngineError, MalformedDocument, UnsupportedVersion
from .graph import WorkflowGraph

FORMAT_VERSION = 1


def to_document(graph: WorkflowGraph) -> dict:
    nodes = []
    for node in sorted(graph.nodes(), key=lambda n: n.node_id):
        descriptor = graph.descriptor(node.node_id)
        literals = {
            str(index): format_literal(value)
            for index, value in sorted(node.literal_inputs.items())
        }
        nodes.append(
            {
                "id": node.node_id,
                "type": node.type_id,
                "position": [node.position[0], node.position[1]],
                "state": {f.name: node.state[f.name] for f in descriptor.state_schema},
                "literals": literals,
                "preview": node.preview,
            }
        )
    wires = [
        {"from": [w.from_[0], w.from_[1]], "to": [w.to[0], w.to[1]]}
        for w in sorted(graph.wires(), key=lambda w: (w.to, w.from_))
    ]
    return {"format_version": FORMAT_VERSION, "nodes": nodes, "wires": wires}


def to_json(graph: WorkflowGraph) -> str:
    return json.dumps(to_document(graph), indent=2) + "\n"


def _expect(condition: bool, location: str, message: str) -> None:
    if not condition:
        raise MalformedDocument(location, message)


def _node_entry(registry: Registry, graph: WorkflowGraph, raw, position: int) -> None:
    where = f"nodes[{position}]"
    _expect(isinstance(raw, dict), where, "node entry must be an object")
    for key in ("id", "type", "position", "state", "literals", "preview"):
        _expect(key in raw, where, f"missing key {key!r}")
    node_id, type_id = raw["id"], raw["type"]
    _expect(isinstance(node_id, str) and node_id != "", where, "id must be a nonempty string")
    _expect(isinstance(type_id, str), where, "type must be a string")
    pos = raw["position"]
    _expect(
        isinstance(pos, list)
        and len(pos) == 2
        and all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in pos),
        where,
        "position must be a pair of numbers",
    )
    _expect(isinstance(raw["state"], dict), where, "state must be an object")
    _expect(isinstance(raw["literals"], dict), where, "literals must be an object")
    _expect(isinstance(raw["preview"], bool), where, "preview must be a boolean")
    descriptor = registry.get(type_id)
    literals: dict[int, object] = {}
    for key, text in raw["literals"].items():
        _expect(
            isinstance(key, str) and key.isdigit(), where, f"literal key {key!r} is not a port index"
        )
        _expect(isinstance(text, str), where, f"literal for port {key} must be a string")
        index = int(key)
        if descriptor is not None and 0 <= index < len(descriptor.inputs):
            try:
                literals[index] = parse_literal(text, descriptor.inputs[index].kind)
            except KindError as exc:
                raise MalformedDocument(where, str(exc)) from None
        else:
            literals[index] = text
    try:
        graph.add_node(
            type_id,
            node_id,
            position=(float(pos[0]), float(pos[1])),
            state=dict(raw["state"]),
            literals=literals,
            preview=raw["preview"],
        )
    except EngineError as exc:
        raise MalformedDocument(where, str(exc)) from None


def _wire_entry(graph: WorkflowGraph, raw, position: int) -> None:
    where = f"wires[{position}]"
    _expect(isinstance(raw, dict), where, "wire entry must be an object")
    for key in ("from", "to"):
        end = raw.get(key)
        _expect(
            isinstance(end, list)
            and len(end) == 2
            and isinstance(end[0], str)
            and isinstance(end[1], int)
            and not isinstance(end[1], bool),
            where,
            f"{key} must be [node id, port index]",
        )
    try:
        graph.connect((raw["from"][0], raw["from"][1]), (raw["to"][0], raw["to"][1]))
    except EngineError as exc:
        raise MalformedDocument(where, str(exc)) from None


def from_document(document, registry: Registry) -> WorkflowGraph:
    _expect(isinstance(document, dict), "document", "top level must be an object")
    version = document.get("format_version")
    if version != FORMAT_VERSION:
        raise UnsupportedVersion(version)
    nodes = document.get("nodes")
    wires = document.get("wires")
    _expect(isinstance(nodes, list), "nodes", "must be a list")
    _expect(isinstance(wires, list), "wires", "must be a list")
    graph = WorkflowGraph(registry)
    for position, raw in enumerate(nodes):
        _node_entry(registry, graph, raw, position)
    for position, raw in enumerate(wires):
        _wire_entry(graph, raw, position)
    return graph


def from_json(text: str, registry: Registry) -> WorkflowGraph:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedDocument("document", f"not valid JSON: {exc}") from None
    return from_document(document, registry)


__all__ = ["FORMAT_VERSION", "from_document", "from_json", "to_document", "to_json"]
