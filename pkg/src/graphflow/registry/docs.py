"""Render the component catalog as one unified text document.

Each component becomes a self-contained record: metadata first, then
indexed inputs, indexed outputs, and persisted state fields. The format
is line-oriented Markdown and parses back without loss, which the tests
use to prove nothing is dropped.
"""
from __future__ import annotations

from dataclasses import dataclass

from .model import ComponentDescriptor, PortDescriptor, Registry, StateField
from .values import ValueKind, format_literal, parse_literal


class DocFormatError(Exception):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class DocChunk:
    type_id: str
    text: str
    token_estimate: int


def _check_single_line(value: str, what: str) -> str:
    if "\n" in value:
        raise ValueError(f"{what} must be single-line")
    return value


def _render_input(port: PortDescriptor, out: list[str]) -> None:
    out.append(f"Input {port.index}:")
    out.append(f"  Name: {_check_single_line(port.name, 'port name')}")
    out.append(f"  Description: {_check_single_line(port.description, 'port description')}")
    out.append(f"  Type: {port.kind.value}")
    out.append(f"  Optional: {'yes' if port.optional else 'no'}")
    out.append(f"  Default: {'none' if port.default is None else format_literal(port.default)}")
    out.append(f"  Access: {port.access}")


def _render_output(port: PortDescriptor, out: list[str]) -> None:
    out.append(f"Output {port.index}:")
    out.append(f"  Name: {_check_single_line(port.name, 'port name')}")
    out.append(f"  Description: {_check_single_line(port.description, 'port description')}")
    out.append(f"  Type: {port.kind.value}")
    out.append(f"  Data Structure: {_check_single_line(port.data_structure_note, 'note')}")


def render_component(c: ComponentDescriptor) -> str:
    lines = [f"# Component: {_check_single_line(c.name, 'name')}", ""]
    lines.append(f"Name: {c.name}")
    lines.append(f"Nickname: {_check_single_line(c.nickname, 'nickname')}")
    lines.append(f"Category: {_check_single_line(c.category, 'category')}")
    lines.append(f"Description: {_check_single_line(c.description, 'description')}")
    lines.append(f"Type Id: {c.type_id}")
    lines.append(f"Default Preview Display: {'on' if c.default_preview else 'off'}")
    for port in c.inputs:
        _render_input(port, lines)
    for port in c.outputs:
        _render_output(port, lines)
    for f in c.state_schema:
        lines.append(f"State {f.name}:")
        lines.append(f"  Type: {f.kind.value}")
        lines.append(f"  Default: {format_literal(f.default)}")
        lines.append(f"  Description: {_check_single_line(f.description, 'state description')}")
    return "\n".join(lines)


def build_chunks(registry: Registry) -> list[DocChunk]:
    chunks = []
    for descriptor in registry:
        text = render_component(descriptor)
        chunks.append(DocChunk(descriptor.type_id, text, max(1, len(text) // 4)))
    return chunks


def export_docs(registry: Registry) -> str:
    parts = [chunk.text for chunk in build_chunks(registry)]
    return "\n\n".join(parts) + ("\n" if parts else "")


# --- parsing back ------------------------------------------------------


class _Cursor:
    def __init__(self, text: str):
        self.lines = text.split("\n")
        self.pos = 0

    def peek(self) -> str | None:
        while self.pos < len(self.lines) and not self.lines[self.pos].strip():
            self.pos += 1
        return self.lines[self.pos] if self.pos < len(self.lines) else None

    def take(self) -> str:
        line = self.peek()
        if line is None:
            raise DocFormatError(self.pos, "unexpected end of document")
        self.pos += 1
        return line

    @property
    def line_no(self) -> int:
        return self.pos + 1


def _field(cursor: _Cursor, name: str) -> str:
    line = cursor.take()
    prefix = f"{name}:"
    if not line.strip().startswith(prefix):
        raise DocFormatError(cursor.line_no, f"expected {prefix!r}, got {line!r}")
    return line.strip()[len(prefix):].strip()


def _kind(text: str, line_no: int) -> ValueKind:
    for kind in ValueKind:
        if kind.value == text:
            return kind
    raise DocFormatError(line_no, f"unknown value kind {text!r}")


def _parse_ports_and_state(cursor: _Cursor):
    inputs: list[PortDescriptor] = []
    outputs: list[PortDescriptor] = []
    state: list[StateField] = []
    while True:
        line = cursor.peek()
        if line is None or line.startswith("# Component:"):
            break
        head = line.strip()
        if head.startswith("Input "):
            cursor.take()
            index = int(head[len("Input "):-1])
            name = _field(cursor, "Name")
            description = _field(cursor, "Description")
            kind = _kind(_field(cursor, "Type"), cursor.line_no)
            optional = _field(cursor, "Optional") == "yes"
            raw_default = _field(cursor, "Default")
            default = None if raw_default == "none" else parse_literal(raw_default, kind)
            access = _field(cursor, "Access")
            inputs.append(PortDescriptor(index, name, description, kind, optional, default, access))
        elif head.startswith("Output "):
            cursor.take()
            index = int(head[len("Output "):-1])
            name = _field(cursor, "Name")
            description = _field(cursor, "Description")
            kind = _kind(_field(cursor, "Type"), cursor.line_no)
            note = _field(cursor, "Data Structure")
            outputs.append(
                PortDescriptor(index, name, description, kind, data_structure_note=note)
            )
        elif head.startswith("State "):
            cursor.take()
            name = head[len("State "):-1]
            kind = _kind(_field(cursor, "Type"), cursor.line_no)
            default = parse_literal(_field(cursor, "Default"), kind)
            description = _field(cursor, "Description")
            state.append(StateField(name, kind, default, description))
        else:
            raise DocFormatError(cursor.line_no, f"unexpected line {line!r}")
    return tuple(inputs), tuple(outputs), tuple(state)


def parse_docs(text: str) -> list[ComponentDescriptor]:
    """Inverse of export_docs; returns descriptors in document order."""
    cursor = _Cursor(text)
    components = []
    while True:
        line = cursor.peek()
        if line is None:
            break
        if not line.startswith("# Component:"):
            raise DocFormatError(cursor.line_no, f"expected a component header, got {line!r}")
        cursor.take()
        name = _field(cursor, "Name")
        nickname = _field(cursor, "Nickname")
        category = _field(cursor, "Category")
        description = _field(cursor, "Description")
        type_id = _field(cursor, "Type Id")
        preview = _field(cursor, "Default Preview Display") == "on"
        inputs, outputs, state = _parse_ports_and_state(cursor)
        components.append(
            ComponentDescriptor(
                type_id, name, nickname, category, description, preview, inputs, outputs, state
            )
        )
    return components


# --- machine-readable catalog ------------------------------------------


def catalog_json(registry: Registry) -> list[dict]:
    records = []
    for c in registry:
        records.append(
            {
                "type_id": c.type_id,
                "name": c.name,
                "nickname": c.nickname,
                "category": c.category,
                "description": c.description,
                "default_preview": c.default_preview,
                "inputs": [
                    {
                        "index": p.index,
                        "name": p.name,
                        "description": p.description,
                        "kind": p.kind.value,
                        "optional": p.optional,
                        "default": None if p.default is None else format_literal(p.default),
                        "access": p.access,
                    }
                    for p in c.inputs
                ],
                "outputs": [
                    {
                        "index": p.index,
                        "name": p.name,
                        "description": p.description,
                        "kind": p.kind.value,
                        "data_structure": p.data_structure_note,
                    }
                    for p in c.outputs
                ],
                "state": [
                    {
                        "name": f.name,
                        "kind": f.kind.value,
                        "default": format_literal(f.default),
                        "description": f.description,
                    }
                    for f in c.state_schema
                ],
            }
        )
    return records


__all__ = [
    "DocChunk",
    "DocFormatError",
    "build_chunks",
    "catalog_json",
    "export_docs",
    "parse_docs",
    "render_component",
]
