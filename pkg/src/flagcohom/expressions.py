"""Parser for ring elements written as plain text.

Grammar: sums of products of generator names, integer literals and
parenthesized subexpressions, with `^` (or `**`) powers and `/` restricted
to division by integer literals. Every name must be declared in the
generator universe the expression is parsed against.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import GradedElement, Generators

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>\*\*|[()+\-*/^]))"
)


class ElementSyntaxError(ValueError):
    """Raised for malformed element expressions, with a position."""

    def __init__(self, text: str, pos: int, message: str):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ElementSyntaxError(text, pos, f"unexpected character {text[pos]!r}")
        if m.lastgroup == "int":
            tokens.append(("int", m.group("int"), m.start("int")))
        elif m.lastgroup == "name":
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            op = m.group("op")
            tokens.append(("op", "^" if op == "**" else op, m.start("op")))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, gens: Generators, text: str):
        self.gens = gens
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, value, pos = self.take()
        if kind != "op" or value != op:
            raise ElementSyntaxError(self.text, pos, f"expected {op!r}")

    def parse(self) -> GradedElement:
        value = self.expr()
        kind, _, pos = self.peek()
        if kind != "end":
            raise ElementSyntaxError(self.text, pos, "trailing input")
        return value

    def expr(self) -> GradedElement:
        value = self.term()
        while True:
            kind, op, _ = self.peek()
            if kind == "op" and op in "+-":
                self.take()
                rhs = self.term()
                value = value + rhs if op == "+" else value - rhs
            else:
                return value

    def term(self) -> GradedElement:
        value = self.atom()
        while True:
            kind, op, pos = self.peek()
            if kind == "op" and op == "*":
                self.take()
                value = value * self.atom()
            elif kind == "op" and op == "/":
                self.take()
                k, v, p = self.take()
                if k != "int":
                    raise ElementSyntaxError(self.text, p, "can only divide by an integer literal")
                value = value / Fraction(int(v))
            else:
                return value

    def atom(self) -> GradedElement:
        kind, value, pos = self.peek()
        if kind == "op" and value in "+-":
            self.take()
            inner = self.atom()
            return inner if value == "+" else -inner
        base = self.base()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "^":
                self.take()
                k, v, p = self.take()
                if k != "int":
                    raise ElementSyntaxError(self.text, p, "exponent must be an integer literal")
                base = base ** int(v)
            else:
                return base

    def base(self) -> GradedElement:
        kind, value, pos = self.take()
        if kind == "int":
            return self.gens.scalar(int(value))
        if kind == "name":
            return self.gens.gen(value)
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ElementSyntaxError(self.text, pos, "expected a name, number or '('")


def parse_element(gens: Generators, text: str) -> GradedElement:
    """Parse `text` into an element over `gens`."""
    return _Parser(gens, text).parse()
