"""Build a workflow graph by replaying script statements."""
from __future__ import annotations

from graphflow.engine import EngineError, WorkflowGraph, auto_layout
from graphflow.registry.model import Registry
from graphflow.registry.values import KindError, parse_literal

from .parser import Add, Assign, Connect, Layout, Preview, ScriptAst
from .validator import pair_target


class ScriptExecutionError(Exception):
    """An engine error, attributed to the script line that caused it."""

    def __init__(self, line: int, cause: Exception):
        super().__init__(f"line {line}: {cause}")
        self.line = line
        self.cause = cause


def _split_pairs(descriptor, add: Add):
    state: dict[str, object] = {}
    literals: dict[int, object] = {}
    for name, raw in add.pairs:
        where, target = pair_target(descriptor, name)
        if where is None:
            raise KindError(f"{add.type_id} has no state field or input named {name!r}")
        value = parse_literal(raw, target.kind)
        if where == "state":
            state[name] = value
        else:
            literals[target.index] = value
    return state, literals


def _run_add(graph: WorkflowGraph, st: Add) -> bool:
    descriptor = graph.registry.get(st.type_id)
    state: dict[str, object] = {}
    literals: dict[int, object] = {}
    if descriptor is not None:
        state, literals = _split_pairs(descriptor, st)
    graph.add_node(
        st.type_id,
        st.node_id,
        position=st.position or (0.0, 0.0),
        state=state,
        literals=literals,
    )
    return st.position is not None


def _run_assign(graph: WorkflowGraph, st: Assign) -> None:
    descriptor = graph.descriptor(st.target.node_id)
    inputs = descriptor.inputs
    if descriptor.is_slider or not 0 <= st.target.index < len(inputs):
        # the engine raises its own SliderMisuse / UnknownPort here
        graph.set_literal(st.target.node_id, st.target.index, None)
        return
    value = parse_literal(st.literal, inputs[st.target.index].kind)
    graph.set_literal(st.target.node_id, st.target.index, value)


def execute(ast: ScriptAst, registry: Registry) -> WorkflowGraph:
    """Replay a validated script; errors carry their script line."""
    graph = WorkflowGraph(registry)
    any_position = False
    layout_requested = False
    for st in ast.statements:
        try:
            if isinstance(st, Add):
                any_position = _run_add(graph, st) or any_position
            elif isinstance(st, Connect):
                graph.connect((st.src.node_id, st.src.index), (st.dst.node_id, st.dst.index))
            elif isinstance(st, Assign):
                _run_assign(graph, st)
            elif isinstance(st, Preview):
                graph.set_preview(st.node_id, st.on)
            elif isinstance(st, Layout):
                layout_requested = True
        except (EngineError, KindError) as exc:
            raise ScriptExecutionError(st.line, exc) from exc
    if layout_requested or not any_position:
        auto_layout(graph)
    return graph


__all__ = ["ScriptExecutionError", "execute"]
