"""Static script checks: every structural failure a graph build could
hit is reported as a diagnostic, without executing anything."""
from __future__ import annotations

from graphflow.registry.model import ComponentDescriptor, Registry
from graphflow.registry.values import KindError, parse_literal
from graphflow.registry.values import wire_compatible

from .diagnostics import Diagnostic
from .parser import Add, Assign, Connect, PortEnd, Preview, ScriptAst


def pair_target(descriptor: ComponentDescriptor, name: str):
    """Resolve a `{ name: literal }` key to a state field or input port."""
    fld = descriptor.state_field(name)
    if fld is not None:
        return "state", fld
    wanted = name.lower()
    for port in descriptor.inputs:
        if port.name.lower().replace(" ", "_") == wanted:
            return "input", port
    return None, None


def port_note_matches(note: str, port_name: str) -> bool:
    return note.lower() == port_name.lower().replace(" ", "_")


class _Checker:
    def __init__(self, registry: Registry):
        self.registry = registry
        self.types: dict[str, str | None] = {}
        self.add_lines: dict[str, int] = {}
        self.wired: set[tuple[str, int]] = set()
        self.literals: set[tuple[str, int]] = set()
        self.succ: dict[str, set[str]] = {}
        self.diagnostics: list[Diagnostic] = []

    def error(self, code: str, message: str, line: int, column: int = 1, ident: str = ""):
        self.diagnostics.append(Diagnostic("error", code, message, line, column, ident))

    def warn(self, code: str, message: str, line: int, column: int = 1, ident: str = ""):
        self.diagnostics.append(Diagnostic("warning", code, message, line, column, ident))

    def known_node(self, end_or_id, line: int) -> str | None:
        """Node's type_id if usable; None reported or unusable otherwise."""
        if isinstance(end_or_id, PortEnd):
            node_id, column = end_or_id.node_id, end_or_id.column
        else:
            node_id, column = end_or_id, 1
        if node_id not in self.types:
            self.error(
                "UnknownPort",
                f"no node named {node_id!r} declared before this line",
                line,
                column,
                node_id,
            )
            return None
        return self.types[node_id]

    def descriptor(self, type_id: str | None) -> ComponentDescriptor | None:
        return None if type_id is None else self.registry.get(type_id)

    def reaches(self, start: str, goal: str) -> bool:
        stack, seen = [start], {start}
        while stack:
            for nxt in self.succ.get(stack.pop(), ()):
                if nxt == goal:
                    return True
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return False

    # --- statement checks --------------------------------------------------

    def check_add(self, st: Add) -> None:
        if st.node_id in self.types:
            self.error(
                "DuplicateNodeId", f"node {st.node_id!r} already declared", st.line, 1, st.node_id
            )
            return
        self.add_lines[st.node_id] = st.line
        descriptor = self.registry.get(st.type_id)
        if descriptor is None:
            self.error(
                "UnknownComponent", f"no component type {st.type_id!r}", st.line, 1, st.type_id
            )
            self.types[st.node_id] = None
            return
        self.types[st.node_id] = st.type_id
        self.succ[st.node_id] = set()
        state_raw: dict[str, str] = {}
        for name, raw in st.pairs:
            where, target = pair_target(descriptor, name)
            if where is None:
                self.error(
                    "BadLiteral",
                    f"{st.type_id} has no state field or input named {name!r}",
                    st.line,
                    1,
                    name,
                )
                continue
            kind = target.kind
            try:
                parse_literal(raw, kind)
            except KindError as exc:
                self.error("BadLiteral", str(exc), st.line, 1, name)
                continue
            if where == "state":
                state_raw[name] = raw
            else:
                self.literals.add((st.node_id, target.index))
        if descriptor.is_slider:
            merged = descriptor.default_state()
            for name, raw in state_raw.items():
                merged[name] = parse_literal(raw, descriptor.state_field(name).kind)
            if merged["min"] > merged["max"]:
                self.error(
                    "BadLiteral",
                    f"slider min {merged['min']} exceeds max {merged['max']}",
                    st.line,
                    1,
                    st.node_id,
                )
            if merged["decimals"] < 0:
                self.error("BadLiteral", "slider decimals must be >= 0", st.line, 1, st.node_id)

    def check_connect(self, st: Connect) -> None:
        src_type = self.known_node(st.src, st.line)
        dst_type = self.known_node(st.dst, st.line)
        if st.src.node_id not in self.types or st.dst.node_id not in self.types:
            return
        src_desc = self.descriptor(src_type)
        dst_desc = self.descriptor(dst_type)
        if src_desc is None or dst_desc is None:
            return
        if dst_desc.is_slider:
            self.error(
                "SliderMisuse",
                f"{st.dst.node_id!r} is a slider; it has no input ports to wire into",
                st.line,
                st.dst.column,
                st.dst.node_id,
            )
            return
        if not 0 <= st.src.index < len(src_desc.outputs):
            self.error(
                "UnknownPort",
                f"node {st.src.node_id!r} has no output port {st.src.index}",
                st.line,
                st.src.column,
                st.src.node_id,
            )
            return
        if not 0 <= st.dst.index < len(dst_desc.inputs):
            self.error(
                "UnknownPort",
                f"node {st.dst.node_id!r} has no input port {st.dst.index}",
                st.line,
                st.dst.column,
                st.dst.node_id,
            )
            return
        src_port = src_desc.outputs[st.src.index]
        dst_port = dst_desc.inputs[st.dst.index]
        for end, port in ((st.src, src_port), (st.dst, dst_port)):
            if end.name_note and not port_note_matches(end.name_note, port.name):
                self.warn(
                    "UnknownPort",
                    f"port {end.index} of {end.node_id!r} is named {port.name!r},"
                    f" not {end.name_note!r}",
                    st.line,
                    end.column,
                    end.name_note,
                )
        key = (st.dst.node_id, st.dst.index)
        if key in self.wired:
            self.error(
                "InputOccupied",
                f"input {st.dst.index} of {st.dst.node_id!r} already has a wire",
                st.line,
                st.dst.column,
                st.dst.node_id,
            )
            return
        if not wire_compatible(src_port.kind, dst_port.kind):
            self.error(
                "KindMismatch",
                f"cannot wire {src_port.kind.value} output {st.src.node_id}.{st.src.index}"
                f" into {dst_port.kind.value} input {st.dst.node_id}.{st.dst.index}",
                st.line,
                st.src.column,
                st.src.node_id,
            )
            return
        if st.src.node_id == st.dst.node_id or self.reaches(st.dst.node_id, st.src.node_id):
            self.error(
                "CycleCreated",
                f"wire {st.src.node_id!r} -> {st.dst.node_id!r} would close a cycle",
                st.line,
                st.src.column,
                st.src.node_id,
            )
            return
        self.succ[st.src.node_id].add(st.dst.node_id)
        self.wired.add(key)
        self.literals.discard(key)

    def check_assign(self, st: Assign) -> None:
        node_type = self.known_node(st.target, st.line)
        if st.target.node_id not in self.types:
            return
        descriptor = self.descriptor(node_type)
        if descriptor is None:
            return
        if descriptor.is_slider:
            self.error(
                "SliderMisuse",
                f"{st.target.node_id!r} is a slider; set its value in the add block,"
                " not through an input port",
                st.line,
                st.target.column,
                st.target.node_id,
            )
            return
        if not 0 <= st.target.index < len(descriptor.inputs):
            self.error(
                "UnknownPort",
                f"node {st.target.node_id!r} has no input port {st.target.index}",
                st.line,
                st.target.column,
                st.target.node_id,
            )
            return
        key = (st.target.node_id, st.target.index)
        if key in self.wired:
            self.error(
                "InputOccupied",
                f"input {st.target.index} of {st.target.node_id!r} already has a wire",
                st.line,
                st.target.column,
                st.target.node_id,
            )
            return
        port = descriptor.inputs[st.target.index]
        try:
            parse_literal(st.literal, port.kind)
        except KindError as exc:
            self.error("BadLiteral", str(exc), st.line, st.target.column, st.target.node_id)
            return
        self.literals.add(key)

    def check_missing_inputs(self) -> None:
        for node_id, type_id in self.types.items():
            descriptor = self.descriptor(type_id)
            if descriptor is None:
                continue
            for port in descriptor.inputs:
                key = (node_id, port.index)
                if port.default is None and not port.optional:
                    if key not in self.wired and key not in self.literals:
                        self.error(
                            "MissingRequiredInput",
                            f"input {port.index} ({port.name}) of {node_id!r}"
                            " never receives a value",
                            self.add_lines[node_id],
                            1,
                            node_id,
                        )


def validate(ast: ScriptAst, registry: Registry) -> list[Diagnostic]:
    checker = _Checker(registry)
    for statement in ast.statements:
        if isinstance(statement, Add):
            checker.check_add(statement)
        elif isinstance(statement, Connect):
            checker.check_connect(statement)
        elif isinstance(statement, Assign):
            checker.check_assign(statement)
        elif isinstance(statement, Preview):
            checker.known_node(statement.node_id, statement.line)
    checker.check_missing_inputs()
    return checker.diagnostics


__all__ = ["pair_target", "port_note_matches", "validate"]
