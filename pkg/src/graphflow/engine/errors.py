"""Errors raised by graph construction, mutation, and evaluation."""
from __future__ import annotations


class EngineError(Exception):
    pass


class UnknownComponent(EngineError):
    def __init__(self, type_id: str):
        super().__init__(f"unknown component type {type_id!r}")
        self.type_id = type_id


class DuplicateNodeId(EngineError):
    def __init__(self, node_id: str):
        super().__init__(f"node id {node_id!r} already in use")
        self.node_id = node_id


class UnknownNode(EngineError):
    def __init__(self, node_id: str):
        super().__init__(f"no node named {node_id!r}")
        self.node_id = node_id


class UnknownPort(EngineError):
    def __init__(self, node_id: str, direction: str, index: int):
        super().__init__(f"node {node_id!r} has no {direction} port {index}")
        self.node_id = node_id
        self.direction = direction
        self.index = index


class BadLiteralKind(EngineError):
    pass


class KindMismatch(EngineError):
    def __init__(self, message: str):
        super().__init__(message)


class CycleCreated(EngineError):
    def __init__(self, from_node: str, to_node: str):
        super().__init__(f"wire {from_node!r} -> {to_node!r} would close a cycle")
        self.from_node = from_node
        self.to_node = to_node


class InputOccupied(EngineError):
    def __init__(self, node_id: str, index: int):
        super().__init__(f"input {index} of node {node_id!r} already has a wire")
        self.node_id = node_id
        self.index = index


class SliderMisuse(EngineError):
    """Input-style addressing used on a stateful source with no inputs."""

    def __init__(self, node_id: str, detail: str):
        super().__init__(f"node {node_id!r}: {detail}")
        self.node_id = node_id


class NotStateful(EngineError):
    def __init__(self, node_id: str):
        super().__init__(f"node {node_id!r} has no persisted state")
        self.node_id = node_id


class UnknownField(EngineError):
    def __init__(self, node_id: str, name: str):
        super().__init__(f"node {node_id!r} has no state field {name!r}")
        self.node_id = node_id
        self.field = name


class MissingRequiredInput(EngineError):
    def __init__(self, node_id: str, index: int, port_name: str = ""):
        label = f" ({port_name})" if port_name else ""
        super().__init__(f"input {index}{label} of node {node_id!r} is required but unbound")
        self.node_id = node_id
        self.index = index


class EvaluationError(EngineError):
    def __init__(self, node_id: str, cause: str, chain: tuple[str, ...] = ()):
        upstream = f" (upstream: {' -> '.join(chain)})" if chain else ""
        super().__init__(f"node {node_id!r} failed: {cause}{upstream}")
        self.node_id = node_id
        self.cause = cause
        self.chain = chain


class NotEvaluated(EngineError):
    pass


class TreeError(EngineError):
    pass


class UnsupportedVersion(EngineError):
    def __init__(self, version):
        super().__init__(f"cannot read document format version {version!r}")
        self.version = version


class MalformedDocument(EngineError):
    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location


__all__ = [
    "BadLiteralKind",
    "CycleCreated",
    "DuplicateNodeId",
    "EngineError",
    "EvaluationError",
    "InputOccupied",
    "KindMismatch",
    "MalformedDocument",
    "MissingRequiredInput",
    "NotEvaluated",
    "NotStateful",
    "SliderMisuse",
    "TreeError",
    "UnknownComponent",
    "UnknownField",
    "UnknownNode",
    "UnknownPort",
    "UnsupportedVersion",
]
