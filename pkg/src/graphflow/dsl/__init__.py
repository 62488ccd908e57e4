"""Workflow-construction script language: parser, validator, executor,
and the arithmetic formula evaluator behind the expression component."""
from . import expressions
from .diagnostics import CODES, Diagnostic, SEVERITIES, errors_only
from .executor import ScriptExecutionError, execute
from .parser import (
    Add,
    Assign,
    Connect,
    Layout,
    PortEnd,
    Preview,
    ScriptAst,
    ScriptParseError,
    Statement,
    format_script,
    format_statement,
    parse_script,
)
from .validator import validate

__all__ = [
    "Add",
    "Assign",
    "CODES",
    "Connect",
    "Diagnostic",
    "Layout",
    "PortEnd",
    "Preview",
    "SEVERITIES",
    "ScriptAst",
    "ScriptExecutionError",
    "ScriptParseError",
    "Statement",
    "errors_only",
    "execute",
    "expressions",
    "format_script",
    "format_statement",
    "parse_script",
    "validate",
]
