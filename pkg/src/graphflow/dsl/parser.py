"""Workflow-script parsing: line-oriented statements into an AST.

One statement per line. `#` starts a comment. Keywords and identifiers
are case-sensitive. Literals keep their source text in the AST; kinds
are resolved later against the receiving port or state field.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .diagnostics import Diagnostic


class ScriptParseError(Exception):
    """Parsing failed; no partial AST is produced."""

    def __init__(self, diagnostics: list[Diagnostic]):
        super().__init__("; ".join(d.render() for d in diagnostics))
        self.diagnostics = diagnostics


@dataclass(frozen=True)
class PortEnd:
    node_id: str
    index: int
    name_note: str = ""
    column: int = field(default=1, compare=False)


@dataclass(frozen=True)
class Add:
    type_id: str
    node_id: str
    position: tuple[float, float] | None = None
    pairs: tuple[tuple[str, str], ...] = ()
    line: int = field(default=1, compare=False)


@dataclass(frozen=True)
class Connect:
    src: PortEnd
    dst: PortEnd
    line: int = field(default=1, compare=False)


@dataclass(frozen=True)
class Assign:
    target: PortEnd
    literal: str
    line: int = field(default=1, compare=False)


@dataclass(frozen=True)
class Preview:
    node_id: str
    on: bool
    line: int = field(default=1, compare=False)


@dataclass(frozen=True)
class Layout:
    line: int = field(default=1, compare=False)


Statement = Add | Connect | Assign | Preview | Layout


@dataclass(frozen=True)
class ScriptAst:
    statements: tuple[Statement, ...]


_TOKEN = re.compile(
    r"[ \t]*(?:(?P<arrow>->)"
    r"|(?P<string>\"(?:[^\"\\]|\\.)*\")"
    r"|(?P<num>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?)"
    r"|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<sym>[-(){},:=.]))"
)


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    column: int


def _strip_comment(raw: str) -> str:
    in_string = False
    i = 0
    while i < len(raw):
        ch = raw[i]
        if in_string:
            if ch == "\\":
                i += 1
            elif ch == '"':
                in_string = False
        elif ch == '"':
            in_string = True
        elif ch == "#":
            return raw[:i]
        i += 1
    return raw


def _lex_line(raw: str, line_no: int) -> list[_Tok]:
    text = _strip_comment(raw)
    tokens: list[_Tok] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if match is None:
            offending = text[pos:].lstrip()[0]
            raise _single_error(line_no, pos + 1, f"unexpected character {offending!r}", offending)
        kind = match.lastgroup
        tokens.append(_Tok(kind, match.group(kind), match.start(kind) + 1))
        pos = match.end()
    return tokens


def _single_error(line: int, column: int, message: str, ident: str = "") -> ScriptParseError:
    return ScriptParseError(
        [Diagnostic("error", "ParseError", message, line, column, ident)]
    )


class _Line:
    def __init__(self, tokens: list[_Tok], line_no: int, width: int):
        self.tokens = tokens
        self.line_no = line_no
        self.width = width
        self.pos = 0

    def peek(self) -> _Tok | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expect: str = "") -> _Tok:
        token = self.peek()
        if token is None:
            raise self.fail(f"expected {expect or 'more input'} before end of line")
        self.pos += 1
        return token

    def take_sym(self, symbol: str) -> _Tok:
        token = self.peek()
        if token is None or token.kind not in ("sym", "arrow") or token.text != symbol:
            raise self.fail(f"expected {symbol!r}")
        self.pos += 1
        return token

    def at_sym(self, symbol: str) -> bool:
        token = self.peek()
        return token is not None and token.kind in ("sym", "arrow") and token.text == symbol

    def fail(self, message: str) -> ScriptParseError:
        token = self.peek()
        column = token.column if token else self.width + 1
        ident = token.text if token else ""
        return _single_error(self.line_no, column, message, ident)

    def ident(self, what: str) -> _Tok:
        token = self.take(what)
        if token.kind != "ident":
            self.pos -= 1
            raise self.fail(f"expected {what}, got {token.text!r}")
        return token

    def dotted_name(self, what: str) -> _Tok:
        first = self.ident(what)
        parts = [first.text]
        while self.at_sym("."):
            mark = self.pos
            self.pos += 1
            token = self.peek()
            if token is None or token.kind != "ident":
                self.pos = mark
                break
            parts.append(token.text)
            self.pos += 1
        return _Tok("ident", ".".join(parts), first.column)

    def signed_number(self, what: str) -> _Tok:
        token = self.take(what)
        if token.kind == "sym" and token.text == "-":
            number = self.take(what)
            if number.kind != "num":
                self.pos -= 1
                raise self.fail(f"expected {what}")
            return _Tok("num", "-" + number.text, token.column)
        if token.kind != "num":
            self.pos -= 1
            raise self.fail(f"expected {what}, got {token.text!r}")
        return token

    def port_index(self) -> _Tok:
        token = self.take("port index")
        if token.kind != "num" or not token.text.isdigit():
            self.pos -= 1
            raise self.fail("expected a port index (a plain integer)")
        return token

    def literal(self) -> str:
        token = self.peek()
        if token is None:
            raise self.fail("expected a literal")
        if token.kind == "string":
            self.pos += 1
            return token.text
        if token.kind == "num" or (token.kind == "sym" and token.text == "-"):
            return self.signed_number("a number").text
        if token.kind == "ident":
            return self.dotted_name("a literal").text
        if token.kind == "sym" and token.text == "(":
            self.pos += 1
            x = self.signed_number("a number").text
            self.take_sym(",")
            y = self.signed_number("a number").text
            self.take_sym(",")
            z = self.signed_number("a number").text
            self.take_sym(")")
            return f"({x}, {y}, {z})"
        raise self.fail(f"expected a literal, got {token.text!r}")

    def port_end(self) -> PortEnd:
        node = self.ident("a node name")
        self.take_sym(".")
        index = self.port_index()
        note = ""
        if self.at_sym(":"):
            self.pos += 1
            note = self.ident("a port name after ':'").text
        return PortEnd(node.text, int(index.text), note, node.column)

    def done(self) -> None:
        token = self.peek()
        if token is not None:
            raise self.fail(f"unexpected {token.text!r} after statement")


def _parse_add(line: _Line) -> Add:
    type_id = line.dotted_name("a component type")
    node = line.ident("a node name")
    position = None
    token = line.peek()
    if token is not None and token.kind == "ident" and token.text == "at":
        line.pos += 1
        line.take_sym("(")
        x = line.signed_number("a coordinate").text
        line.take_sym(",")
        y = line.signed_number("a coordinate").text
        line.take_sym(")")
        position = (float(x), float(y))
    pairs: list[tuple[str, str]] = []
    if line.at_sym("{"):
        line.pos += 1
        while not line.at_sym("}"):
            name = line.ident("a field name")
            line.take_sym(":")
            pairs.append((name.text, line.literal()))
            if line.at_sym(","):
                line.pos += 1
            elif not line.at_sym("}"):
                raise line.fail("expected ',' or '}' in the field block")
        line.pos += 1
    line.done()
    return Add(type_id.text, node.text, position, tuple(pairs), line.line_no)


def _parse_statement(line: _Line) -> Statement:
    keyword = line.ident("a statement keyword")
    if keyword.text == "add":
        return _parse_add(line)
    if keyword.text == "connect":
        src = line.port_end()
        line.take_sym("->")
        dst = line.port_end()
        line.done()
        return Connect(src, dst, line.line_no)
    if keyword.text == "set":
        target = line.port_end()
        line.take_sym("=")
        literal = line.literal()
        line.done()
        return Assign(target, literal, line.line_no)
    if keyword.text in ("show", "hide"):
        node = line.ident("a node name")
        line.done()
        return Preview(node.text, keyword.text == "show", line.line_no)
    if keyword.text == "layout":
        mode = line.ident("'auto'")
        if mode.text != "auto":
            raise _single_error(line.line_no, mode.column, "only 'layout auto' exists", mode.text)
        line.done()
        return Layout(line.line_no)
    raise _single_error(
        line.line_no, keyword.column, f"unknown statement {keyword.text!r}", keyword.text
    )


def parse_script(text: str) -> ScriptAst:
    statements: list[Statement] = []
    problems: list[Diagnostic] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        try:
            tokens = _lex_line(raw, line_no)
            if not tokens:
                continue
            statements.append(_parse_statement(_Line(tokens, line_no, len(raw))))
        except ScriptParseError as exc:
            problems.extend(exc.diagnostics)
    if problems:
        raise ScriptParseError(problems)
    return ScriptAst(tuple(statements))


def _format_port(end: PortEnd) -> str:
    note = f":{end.name_note}" if end.name_note else ""
    return f"{end.node_id}.{end.index}{note}"


def format_statement(statement: Statement) -> str:
    if isinstance(statement, Add):
        parts = [f"add {statement.type_id} {statement.node_id}"]
        if statement.position is not None:
            x, y = statement.position
            parts.append(f"at ({x:g}, {y:g})")
        if statement.pairs:
            body = ", ".join(f"{name}: {value}" for name, value in statement.pairs)
            parts.append("{ " + body + " }")
        return " ".join(parts)
    if isinstance(statement, Connect):
        return f"connect {_format_port(statement.src)} -> {_format_port(statement.dst)}"
    if isinstance(statement, Assign):
        return f"set {_format_port(statement.target)} = {statement.literal}"
    if isinstance(statement, Preview):
        return f"{'show' if statement.on else 'hide'} {statement.node_id}"
    return "layout auto"


def format_script(ast: ScriptAst) -> str:
    return "".join(format_statement(s) + "\n" for s in ast.statements)


__all__ = [
    "Add",
    "Assign",
    "Connect",
    "Layout",
    "PortEnd",
    "Preview",
    "ScriptAst",
    "ScriptParseError",
    "Statement",
    "format_script",
    "format_statement",
    "parse_script",
]
