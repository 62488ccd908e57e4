"""Dataflow engine: branch-addressed trees, an acyclic graph of
components, longest-list evaluation, and incremental recomputation."""
from .datatree import DataTree, Path, format_path
from .document import FORMAT_VERSION, from_document, from_json, to_document, to_json
from .errors import (
    BadLiteralKind,
    CycleCreated,
    DuplicateNodeId,
    EngineError,
    EvaluationError,
    InputOccupied,
    KindMismatch,
    MalformedDocument,
    MissingRequiredInput,
    NotEvaluated,
    NotStateful,
    SliderMisuse,
    TreeError,
    UnknownComponent,
    UnknownField,
    UnknownNode,
    UnknownPort,
    UnsupportedVersion,
)
from .evaluator import NodeOutputs, evaluate, reevaluate_dirty
from .graph import Node, PortRef, Wire, WorkflowGraph, normalize_slider_state, round_half_up
from .layout import COLUMN_PITCH, ROW_PITCH, auto_layout
from .preview import preview_geometry

__all__ = [
    "BadLiteralKind",
    "COLUMN_PITCH",
    "CycleCreated",
    "DataTree",
    "DuplicateNodeId",
    "EngineError",
    "EvaluationError",
    "FORMAT_VERSION",
    "InputOccupied",
    "KindMismatch",
    "MalformedDocument",
    "MissingRequiredInput",
    "Node",
    "NodeOutputs",
    "NotEvaluated",
    "NotStateful",
    "Path",
    "PortRef",
    "ROW_PITCH",
    "SliderMisuse",
    "TreeError",
    "UnknownComponent",
    "UnknownField",
    "UnknownNode",
    "UnknownPort",
    "UnsupportedVersion",
    "Wire",
    "WorkflowGraph",
    "auto_layout",
    "evaluate",
    "format_path",
    "from_document",
    "from_json",
    "normalize_slider_state",
    "preview_geometry",
    "reevaluate_dirty",
    "round_half_up",
    "to_document",
    "to_json",
]
