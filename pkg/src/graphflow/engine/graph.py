"""The workflow graph: nodes, wires, state, and ordering.

The graph stays acyclic through every mutation and keeps an incremental
topological order (the Pearce-Kelly scheme), so connecting a wire costs
only the affected region and evaluation order is always ready.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal

from graphflow.registry.model import ComponentDescriptor, Registry
from graphflow.registry.values import KindError, ValueKind, coerce_value, wire_compatible

from .errors import (
    BadLiteralKind,
    CycleCreated,
    DuplicateNodeId,
    EngineError,
    InputOccupied,
    KindMismatch,
    NotStateful,
    SliderMisuse,
    UnknownComponent,
    UnknownField,
    UnknownNode,
    UnknownPort,
)

PortRef = tuple[str, int]


@dataclass(frozen=True)
class Wire:
    from_: PortRef
    to: PortRef


@dataclass
class Node:
    node_id: str
    type_id: str
    position: tuple[float, float]
    state: dict
    literal_inputs: dict[int, object]
    preview: bool


def round_half_up(value: float, decimals: int) -> float:
    quantum = Decimal(1).scaleb(-decimals)
    return float(Decimal(str(value)).quantize(quantum, rounding=ROUND_HALF_UP))


def normalize_slider_state(descriptor: ComponentDescriptor, state: dict) -> dict:
    """Clamp value into [min, max] and round to the declared decimals."""
    lo, hi = state["min"], state["max"]
    if lo > hi:
        raise BadLiteralKind(f"slider min {lo} exceeds max {hi}")
    integer = descriptor.state_field("value").kind == ValueKind.INTEGER
    decimals = 0 if integer else int(state["decimals"])
    if decimals < 0:
        raise BadLiteralKind(f"slider decimals must be >= 0, got {decimals}")
    if integer:
        state["decimals"] = 0
    value = min(max(state["value"], lo), hi)
    value = round_half_up(float(value), decimals)
    value = min(max(value, lo), hi)
    state["value"] = int(value) if integer else value
    return state


@dataclass
class WorkflowGraph:
    registry: Registry
    _nodes: dict[str, Node] = field(default_factory=dict)
    _wire_into: dict[PortRef, PortRef] = field(default_factory=dict)
    _succ: dict[str, dict[str, int]] = field(default_factory=dict)
    _pred: dict[str, dict[str, int]] = field(default_factory=dict)
    _order: list[str] = field(default_factory=list)
    _order_index: dict[str, int] = field(default_factory=dict)
    _cache: dict[str, tuple] = field(default_factory=dict)
    _dirty: set[str] = field(default_factory=set)
    _evaluated: bool = False
    recompute_count: int = 0

    # --- introspection --------------------------------------------------

    def node(self, node_id: str) -> Node:
        try:
            return self._nodes[node_id]
        except KeyError:
            raise UnknownNode(node_id) from None

    def nodes(self) -> list[Node]:
        return list(self._nodes.values())

    def node_ids(self) -> list[str]:
        return list(self._nodes)

    def descriptor(self, node_id: str) -> ComponentDescriptor:
        return self.registry.get(self.node(node_id).type_id)

    def wires(self) -> list[Wire]:
        return [Wire(src, dst) for dst, src in self._wire_into.items()]

    def wire_into(self, node_id: str, input_index: int) -> PortRef | None:
        return self._wire_into.get((node_id, input_index))

    def evaluation_order(self) -> list[str]:
        return list(self._order)

    def successors(self, node_id: str) -> list[str]:
        return list(self._succ.get(node_id, ()))

    def predecessors(self, node_id: str) -> list[str]:
        return list(self._pred.get(node_id, ()))

    @property
    def evaluated(self) -> bool:
        return self._evaluated and not self._dirty

    def dirty_nodes(self) -> set[str]:
        return set(self._dirty)

    def cached_outputs(self, node_id: str) -> tuple | None:
        return self._cache.get(node_id)

    # --- mutations -------------------------------------------------------

    def add_node(
        self,
        type_id: str,
        node_id: str,
        position: tuple[float, float] = (0.0, 0.0),
        state: dict | None = None,
        literals: dict[int, object] | None = None,
        preview: bool | None = None,
    ) -> Node:
        descriptor = self.registry.get(type_id)
        if descriptor is None:
            raise UnknownComponent(type_id)
        if node_id in self._nodes:
            raise DuplicateNodeId(node_id)
        merged = descriptor.default_state()
        for key, value in (state or {}).items():
            fld = descriptor.state_field(key)
            if fld is None:
                raise BadLiteralKind(f"{type_id} has no state field {key!r}")
            if fld.kind == ValueKind.INTEGER and isinstance(value, float):
                value = int(round_half_up(value, 0))
            try:
                merged[key] = coerce_value(value, fld.kind)
            except KindError as exc:
                raise BadLiteralKind(str(exc)) from None
        if descriptor.is_slider:
            merged = normalize_slider_state(descriptor, merged)
        node = Node(
            node_id=node_id,
            type_id=type_id,
            position=(float(position[0]), float(position[1])),
            state=merged,
            literal_inputs={},
            preview=descriptor.default_preview if preview is None else preview,
        )
        self._nodes[node_id] = node
        self._succ[node_id] = {}
        self._pred[node_id] = {}
        self._order_index[node_id] = len(self._order)
        self._order.append(node_id)
        for index, value in (literals or {}).items():
            self._assign_literal(node, descriptor, index, value)
        self._mark_dirty(node_id)
        return node

    def _input_port(self, node_id: str, index: int):
        descriptor = self.descriptor(node_id)
        if not 0 <= index < len(descriptor.inputs):
            raise UnknownPort(node_id, "input", index)
        return descriptor.inputs[index]

    def _output_port(self, node_id: str, index: int):
        descriptor = self.descriptor(node_id)
        if not 0 <= index < len(descriptor.outputs):
            raise UnknownPort(node_id, "output", index)
        return descriptor.outputs[index]

    def _assign_literal(self, node: Node, descriptor: ComponentDescriptor, index: int, value):
        if not 0 <= index < len(descriptor.inputs):
            raise UnknownPort(node.node_id, "input", index)
        if (node.node_id, index) in self._wire_into:
            raise InputOccupied(node.node_id, index)
        port = descriptor.inputs[index]
        try:
            node.literal_inputs[index] = coerce_value(value, port.kind)
        except KindError as exc:
            raise BadLiteralKind(str(exc)) from None

    def set_literal(self, node_id: str, index: int, value) -> None:
        node = self.node(node_id)
        descriptor = self.registry.get(node.type_id)
        if descriptor.is_slider:
            raise SliderMisuse(node_id, "sliders take values through state, not input ports")
        self._assign_literal(node, descriptor, index, value)
        self._mark_dirty(node_id)

    def connect(self, from_: PortRef, to: PortRef) -> None:
        src_id, out_index = from_
        dst_id, in_index = to
        src_node = self.node(src_id)
        dst_node = self.node(dst_id)
        if self.registry.get(dst_node.type_id).is_slider:
            raise SliderMisuse(
                dst_id, "sliders have no input ports; set their state instead of wiring into them"
            )
        src_port = self._output_port(src_id, out_index)
        dst_port = self._input_port(dst_id, in_index)
        if to in self._wire_into:
            raise InputOccupied(dst_id, in_index)
        if not wire_compatible(src_port.kind, dst_port.kind):
            raise KindMismatch(
                f"cannot wire {src_port.kind.value} output {src_id}.{out_index} "
                f"into {dst_port.kind.value} input {dst_id}.{in_index}"
            )
        self._require_acyclic(src_id, dst_id)
        self._wire_into[to] = from_
        self._succ[src_id][dst_id] = self._succ[src_id].get(dst_id, 0) + 1
        self._pred[dst_id][src_id] = self._pred[dst_id].get(src_id, 0) + 1
        dst_node.literal_inputs.pop(in_index, None)
        self._mark_dirty(dst_id)

    def _require_acyclic(self, src_id: str, dst_id: str) -> None:
        """Keep the topological order valid for the new edge src -> dst."""
        if src_id == dst_id:
            raise CycleCreated(src_id, dst_id)
        lower = self._order_index[dst_id]
        upper = self._order_index[src_id]
        if upper < lower:
            return
        # forward from dst, bounded by src's position
        forward: list[str] = []
        seen = {dst_id}
        stack = [dst_id]
        while stack:
            current = stack.pop()
            forward.append(current)
            for succ in self._succ[current]:
                if succ == src_id:
                    raise CycleCreated(src_id, dst_id)
                if succ not in seen and self._order_index[succ] <= upper:
                    seen.add(succ)
                    stack.append(succ)
        # backward from src, bounded by dst's position
        backward: list[str] = []
        seen_back = {src_id}
        stack = [src_id]
        while stack:
            current = stack.pop()
            backward.append(current)
            for pred in self._pred[current]:
                if pred not in seen_back and self._order_index[pred] >= lower:
                    seen_back.add(pred)
                    stack.append(pred)
        # shuffle the affected region: everything reaching src first
        affected = sorted(self._order_index[n] for n in forward + backward)
        backward.sort(key=lambda n: self._order_index[n])
        forward.sort(key=lambda n: self._order_index[n])
        for slot, node_id in zip(affected, backward + forward):
            self._order[slot] = node_id
            self._order_index[node_id] = slot

    def set_param(self, node_id: str, fld: str, value) -> None:
        node = self.node(node_id)
        descriptor = self.registry.get(node.type_id)
        if not descriptor.state_schema:
            raise NotStateful(node_id)
        schema_field = descriptor.state_field(fld)
        if schema_field is None:
            raise UnknownField(node_id, fld)
        if schema_field.kind == ValueKind.INTEGER and isinstance(value, float):
            value = int(round_half_up(value, 0))
        try:
            coerced = coerce_value(value, schema_field.kind)
        except KindError as exc:
            raise BadLiteralKind(str(exc)) from None
        candidate = dict(node.state)
        candidate[fld] = coerced
        if descriptor.is_slider:
            candidate = normalize_slider_state(descriptor, candidate)
        node.state = candidate
        self._mark_dirty(node_id)

    def set_preview(self, node_id: str, on: bool) -> None:
        self.node(node_id).preview = bool(on)

    # --- dirtiness --------------------------------------------------------

    def _mark_dirty(self, node_id: str) -> None:
        stack = [node_id]
        while stack:
            current = stack.pop()
            if current in self._dirty:
                continue
            self._dirty.add(current)
            self._cache.pop(current, None)
            stack.extend(self._succ[current])

    def upstream_chain(self, node_id: str) -> tuple[str, ...]:
        """Transitive producers of a node, in evaluation order."""
        seen: set[str] = set()
        stack = [node_id]
        while stack:
            for pred in self._pred[stack.pop()]:
                if pred not in seen:
                    seen.add(pred)
                    stack.append(pred)
        return tuple(sorted(seen, key=lambda n: self._order_index[n]))


__all__ = [
    "Node",
    "PortRef",
    "Wire",
    "WorkflowGraph",
    "normalize_slider_state",
    "round_half_up",
]
