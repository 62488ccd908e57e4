"""Arithmetic formulas for the expression component.

Operators: ^ (right-associative), unary minus, * /, + -, in that
precedence order. Functions: sin, cos, tan, sqrt, abs, floor. The name
pi is a constant unless a binding shadows it.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass


class FormulaError(ValueError):
    pass


class ParseError(FormulaError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class UnboundVariable(FormulaError):
    def __init__(self, name: str):
        super().__init__(f"variable {name!r} has no value")
        self.name = name


class EvaluationError(FormulaError):
    pass


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "ExprAst"


@dataclass(frozen=True)
class Bin:
    op: str
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Call:
    fn: str
    arg: "ExprAst"


ExprAst = Num | Var | Neg | Bin | Call

FUNCTIONS = {
    "sin": math.sin,
    "cos": math.cos,
    "tan": math.tan,
    "sqrt": math.sqrt,
    "abs": abs,
    "floor": lambda v: float(math.floor(v)),
}

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(f"unexpected character {stripped[0]!r}", pos)
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind)))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> tuple[str, str, int]:
        token = self.peek()
        if token is None:
            raise ParseError("unexpected end of formula", len(self.text))
        self.pos += 1
        return token

    def expect_op(self, op: str) -> None:
        token = self.peek()
        if token is None or token[0] != "op" or token[1] != op:
            where = token[2] if token else len(self.text)
            raise ParseError(f"expected {op!r}", where)
        self.pos += 1

    def expr(self) -> ExprAst:
        node = self.term()
        while (token := self.peek()) and token[0] == "op" and token[1] in "+-":
            self.pos += 1
            node = Bin(token[1], node, self.term())
        return node

    def term(self) -> ExprAst:
        node = self.factor()
        while (token := self.peek()) and token[0] == "op" and token[1] in "*/":
            self.pos += 1
            node = Bin(token[1], node, self.factor())
        return node

    def factor(self) -> ExprAst:
        token = self.peek()
        if token and token[0] == "op" and token[1] == "-":
            self.pos += 1
            return Neg(self.factor())
        return self.power()

    def power(self) -> ExprAst:
        base = self.atom()
        token = self.peek()
        if token and token[0] == "op" and token[1] == "^":
            self.pos += 1
            return Bin("^", base, self.factor())
        return base

    def atom(self) -> ExprAst:
        kind, text, where = self.take()
        if kind == "num":
            return Num(float(text))
        if kind == "name":
            follower = self.peek()
            if follower and follower[0] == "op" and follower[1] == "(":
                if text not in FUNCTIONS:
                    raise ParseError(f"unknown function {text!r}", where)
                self.pos += 1
                arg = self.expr()
                self.expect_op(")")
                return Call(text, arg)
            return Var(text)
        if kind == "op" and text == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ParseError(f"unexpected {text!r}", where)


def parse_expression(text: str) -> ExprAst:
    parser = _Parser(text)
    if parser.peek() is None:
        raise ParseError("empty formula", 0)
    node = parser.expr()
    leftover = parser.peek()
    if leftover is not None:
        raise ParseError(f"unexpected {leftover[1]!r} after expression", leftover[2])
    return node


def eval_expression(ast: ExprAst, bindings: dict[str, float]) -> float:
    if isinstance(ast, Num):
        return ast.value
    if isinstance(ast, Var):
        if ast.name in bindings:
            return float(bindings[ast.name])
        if ast.name == "pi":
            return math.pi
        raise UnboundVariable(ast.name)
    if isinstance(ast, Neg):
        return -eval_expression(ast.operand, bindings)
    if isinstance(ast, Call):
        arg = eval_expression(ast.arg, bindings)
        try:
            return float(FUNCTIONS[ast.fn](arg))
        except (ValueError, OverflowError) as exc:
            raise EvaluationError(f"{ast.fn}({arg}) failed: {exc}") from None
    left = eval_expression(ast.left, bindings)
    right = eval_expression(ast.right, bindings)
    try:
        if ast.op == "+":
            return left + right
        if ast.op == "-":
            return left - right
        if ast.op == "*":
            return left * right
        if ast.op == "/":
            return left / right
        return math.pow(left, right)
    except ZeroDivisionError:
        raise EvaluationError(f"division by zero: {left} / 0") from None
    except (ValueError, OverflowError) as exc:
        raise EvaluationError(str(exc)) from None


def evaluate_formula(formula: str, bindings: dict[str, float]) -> float:
    return eval_expression(parse_expression(formula), bindings)


__all__ = [
    "Bin",
    "Call",
    "EvaluationError",
    "ExprAst",
    "FormulaError",
    "FUNCTIONS",
    "Neg",
    "Num",
    "ParseError",
    "UnboundVariable",
    "Var",
    "eval_expression",
    "evaluate_formula",
    "parse_expression",
]
