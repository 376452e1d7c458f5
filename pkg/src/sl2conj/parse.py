"""Polynomial text parser.

Grammar (no implicit multiplication)::

    expr    := term (('+' | '-') term)*
    term    := unary ('*' unary)*
    unary   := ('+' | '-') unary | power
    power   := primary ('^' INT)?
    primary := INT ('/' INT)? | NAME | '(' expr ')'

Binary operators are handled by precedence climbing.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import NamedTuple

from .errors import ParseError, UnknownVariable
from .poly import Poly, PolyRing

_WORD = re.compile(r"(\d+)|([A-Za-z_][A-Za-z_0-9]*)")

_BINARY = {"+": 1, "-": 1, "*": 2}


class Token(NamedTuple):
    kind: str  # "num", "name", "op", "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        m = _WORD.match(text, pos)
        if m:
            kind = "num" if m.group(1) is not None else "name"
            tokens.append(Token(kind, m.group(0), pos))
            pos = m.end()
        elif ch in "+-*^/()":
            tokens.append(Token("op", ch, pos))
            pos += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", pos)
    tokens.append(Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.ring = ring
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect_int(self) -> int:
        t = self.tok
        if t.kind != "num":
            raise ParseError("expected an integer literal", t.pos)
        self.advance()
        return int(t.text)

    def parse(self) -> Poly:
        if self.tok.kind == "end":
            raise ParseError("empty expression", 0)
        value = self.expr(1)
        if self.tok.kind != "end":
            raise ParseError(f"unexpected token {self.tok.text!r}", self.tok.pos)
        return value

    def expr(self, min_prec: int) -> Poly:
        lhs = self.unary()
        while True:
            t = self.tok
            prec = _BINARY.get(t.text) if t.kind == "op" else None
            if prec is None or prec < min_prec:
                return lhs
            self.advance()
            rhs = self.expr(prec + 1)
            if t.text == "+":
                lhs = lhs + rhs
            elif t.text == "-":
                lhs = lhs - rhs
            else:
                lhs = lhs * rhs

    def unary(self) -> Poly:
        t = self.tok
        if t.kind == "op" and t.text in "+-":
            self.advance()
            operand = self.unary()
            return -operand if t.text == "-" else operand
        return self.power()

    def power(self) -> Poly:
        base = self.primary()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.advance()
            k = self.expect_int()
            if self.tok.kind == "op" and self.tok.text == "^":
                raise ParseError("chained exponents need parentheses", self.tok.pos)
            return base**k
        return base

    def primary(self) -> Poly:
        t = self.tok
        if t.kind == "num":
            self.advance()
            value = Fraction(int(t.text))
            if self.tok.kind == "op" and self.tok.text == "/":
                slash = self.advance()
                den = self.expect_int()
                if den == 0:
                    raise ParseError("zero denominator", slash.pos)
                value = Fraction(int(t.text), den)
            return self.ring.const(value)
        if t.kind == "name":
            self.advance()
            if t.text not in self.ring.variables:
                raise UnknownVariable(t.text)
            return self.ring.gen(t.text)
        if t.kind == "op" and t.text == "(":
            self.advance()
            inner = self.expr(1)
            if not (self.tok.kind == "op" and self.tok.text == ")"):
                raise ParseError("expected ')'", self.tok.pos)
            self.advance()
            return inner
        if t.kind == "end":
            raise ParseError("unexpected end of input", t.pos)
        raise ParseError(f"unexpected token {t.text!r}", t.pos)


def parse_poly(text: str, ring: PolyRing) -> Poly:
    """Parse ``text`` into a canonical polynomial of ``ring``."""
    return _Parser(text, ring).parse()
