"""Reader for the polynomial text grammar.

Terms are joined by ``+``/``-``; a term is a product (``*``) of rational
literals, variables ``x1``..``x9`` and parenthesised sub-expressions, each
optionally raised to a non-negative integer power with ``^``.  Whitespace is
ignored.  ``^`` binds tighter than ``*`` which binds tighter than ``+``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .poly import Poly

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>x[1-9])|(?P<op>[-+*^()]))")

MAX_VARS = 9


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r}", pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return tokens


def infer_nvars(text: str) -> int:
    idx = [int(v[1:]) for v in re.findall(r"x[1-9]", text)]
    return max(idx, default=1)


class _Parser:
    def __init__(self, text: str, nvars: int):
        self.tokens = _tokenize(text)
        self.i = 0
        self.nvars = nvars
        self.text = text

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.text))
        self.i += 1
        return tok

    def expect(self, value: str):
        tok = self.take()
        if tok[1] != value:
            raise ParseError(f"expected {value!r}, found {tok[1]!r}", tok[2])

    def expr(self) -> Poly:
        tok = self.peek()
        negate = False
        if tok is not None and tok[1] in "+-" and tok[0] == "op":
            negate = tok[1] == "-"
            self.i += 1
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            tok = self.peek()
            if tok is None or tok[1] not in ("+", "-"):
                return acc
            self.i += 1
            rhs = self.term()
            acc = acc + rhs if tok[1] == "+" else acc - rhs

    def term(self) -> Poly:
        acc = self.power()
        while True:
            tok = self.peek()
            if tok is None or tok[1] != "*":
                return acc
            self.i += 1
            acc = acc * self.power()

    def power(self) -> Poly:
        base = self.atom()
        tok = self.peek()
        if tok is not None and tok[1] == "^":
            self.i += 1
            exp_tok = self.take()
            if exp_tok[0] != "num" or "/" in exp_tok[1]:
                raise ParseError("exponent must be a non-negative integer", exp_tok[2])
            return base ** int(exp_tok[1])
        return base

    def atom(self) -> Poly:
        kind, value, pos = self.take()
        if kind == "num":
            return Poly.const(self.nvars, Fraction(value))
        if kind == "var":
            k = int(value[1:])
            if k > self.nvars:
                raise ParseError(f"variable {value} exceeds nvars={self.nvars}", pos)
            return Poly.var(self.nvars, k)
        if value == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if value == "-":
            return -self.power()
        raise ParseError(f"unexpected token {value!r}", pos)


def parse_poly(text: str, nvars: int | None = None) -> Poly:
    """Parse ``text`` into a ``Poly`` in ``nvars`` variables (inferred when omitted)."""
    if nvars is None:
        nvars = infer_nvars(text)
    if not 1 <= nvars <= MAX_VARS:
        raise ParseError(f"nvars must be in 1..{MAX_VARS}")
    if not text.strip():
        raise ParseError("empty polynomial text", 0)
    p = _Parser(text, nvars)
    out = p.expr()
    if p.peek() is not None:
        tok = p.peek()
        raise ParseError(f"trailing input {tok[1]!r}", tok[2])
    return out
