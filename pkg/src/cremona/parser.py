"""Affine map expressions like ``(x, y/(1+y))``.

Grammar, loosest binding first::

    map    := "(" expr "," expr ")"
    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := "-" unary | power
    power  := atom ("^" ["-"] INT)?
    atom   := INT | "x" | "y" | "(" expr ")"

Multiplication must be written out, exponents are integers, and ``-x^2``
means ``-(x^2)``.  The printer emits the fewest parentheses that parse back
to the same tree.
"""

import re
from dataclasses import dataclass
from typing import Union

from .birmap import BirMap
from .errors import MapSyntaxError
from .exactalg import RatFunc


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


Node = Union[Num, Var, Neg, BinOp, Pow]

_TOKEN = re.compile(r"\s*(?:(\d+)|([xy])|([-+*/^(),]))")

# binding strength used by the printer
_ADD, _MUL, _NEG, _POW, _ATOM = 1, 2, 3, 4, 5


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise MapSyntaxError(f"unexpected character {text[start]!r}", start)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("var", m.group(2), start))
        else:
            tokens.append((m.group(3), m.group(3), start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            want = "end of input" if kind == "end" else repr(kind)
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise MapSyntaxError(f"expected {want}, found {got}", tok[2])
        self.i += 1
        return tok

    def expr(self):
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek()[0] in ("*", "/"):
            op = self.take()[0]
            node = BinOp(op, node, self.unary())
        return node

    def unary(self):
        if self.peek()[0] == "-":
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            sign = 1
            if self.peek()[0] == "-":
                self.take()
                sign = -1
            tok = self.peek()
            if tok[0] != "int":
                raise MapSyntaxError("exponent must be an integer literal", tok[2])
            self.take()
            base = Pow(base, sign * tok[1])
            if self.peek()[0] == "^":
                raise MapSyntaxError("chained exponents need parentheses", self.peek()[2])
        return base

    def atom(self):
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            return Num(tok[1])
        if tok[0] == "var":
            self.take()
            return Var(tok[1])
        if tok[0] == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        got = "end of input" if tok[0] == "end" else repr(tok[1])
        raise MapSyntaxError(f"expected a number, x, y or '(', found {got}", tok[2])


def parse_expr(text):
    p = _Parser(text)
    node = p.expr()
    p.take("end")
    return node


@dataclass(frozen=True)
class MapExpr:
    fx: Node
    fy: Node

    def to_text(self):
        return f"({print_expr(self.fx)}, {print_expr(self.fy)})"

    def __str__(self):
        return self.to_text()

    def to_ratfuncs(self):
        return evaluate(self.fx), evaluate(self.fy)

    def to_birmap(self):
        return BirMap.from_affine(*self.to_ratfuncs())


def parse_map(text):
    p = _Parser(text)
    p.take("(")
    fx = p.expr()
    p.take(",")
    fy = p.expr()
    p.take(")")
    p.take("end")
    return MapExpr(fx, fy)


def _strength(node):
    if isinstance(node, (Num, Var)):
        return _ATOM
    if isinstance(node, Pow):
        return _POW
    if isinstance(node, Neg):
        return _NEG
    return _ADD if node.op in "+-" else _MUL


def _wrap(node, minimum):
    s = print_expr(node)
    return s if _strength(node) >= minimum else f"({s})"


def print_expr(node):
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Pow):
        return f"{_wrap(node.base, _ATOM)}^{node.exponent}"
    if isinstance(node, Neg):
        return "-" + _wrap(node.operand, _NEG)
    level = _strength(node)
    left = _wrap(node.left, level)
    right = _wrap(node.right, level + 1)
    if level == _ADD:
        return f"{left} {node.op} {right}"
    return f"{left}{node.op}{right}"


def evaluate(node):
    """Exact value of an expression tree as a rational function."""
    if isinstance(node, Num):
        return RatFunc.const(node.value)
    if isinstance(node, Var):
        return RatFunc.x() if node.name == "x" else RatFunc.y()
    if isinstance(node, Neg):
        return -evaluate(node.operand)
    if isinstance(node, Pow):
        return evaluate(node.base) ** node.exponent
    a, b = evaluate(node.left), evaluate(node.right)
    if node.op == "+":
        return a + b
    if node.op == "-":
        return a - b
    if node.op == "*":
        return a * b
    return a / b


def parse_ratfunc(text):
    return evaluate(parse_expr(text))
