"""Textual grammar for terms and linear combinations.

    leaf    := NAME ["@" NAT]                  (exponent 0 may be omitted)
    term    := leaf | "(" term "*" term ")" | "(" "A" NAT term ")"
    lincomb := "0" | RATIONAL | part {"+" part}
    part    := [RATIONAL "*"] term             (bare RATIONAL = unit component)

``(A k t)`` is an explicit twist node of weight k and only occurs on input;
parsing normalizes it away.  Names are letters/digits/underscores with any
number of trailing apostrophes (the tensor-leg tags).  Formatting is canonical:
unit component first, then terms ascending in the term order, ``@0`` omitted.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .terms import AlphaNode, Leaf, LinComb, Node, RawTerm, Term, normalize_term


class TermSyntaxError(ValueError):
    """Raised on malformed input; carries 1-based line and column."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<rat>-?\d+(?:/\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*'*)
  | (?P<sym>[()*+@])
    """,
    re.VERBOSE,
)


def _tokenize(text: str):
    tokens = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise TermSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        value = m.group()
        if kind != "ws":
            tokens.append((kind, value, line, col))
        newlines = value.count("\n")
        if newlines:
            line += newlines
            col = len(value) - value.rfind("\n")
        else:
            col += len(value)
        pos = m.end()
    tokens.append(("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message):
        _, value, line, col = self.peek()
        shown = value or "end of input"
        raise TermSyntaxError(f"{message}, got {shown!r}", line, col)

    def expect(self, kind, value=None):
        k, v, line, col = self.peek()
        if k != kind or (value is not None and v != value):
            self.fail(f"expected {value or kind}")
        return self.next()

    # term := leaf | "(" term "*" term ")" | "(" "A" NAT term ")"
    def term(self) -> RawTerm:
        kind, value, line, col = self.peek()
        if kind == "name":
            self.next()
            exp = 0
            if self.peek()[0] == "sym" and self.peek()[1] == "@":
                self.next()
                k, v, l, c = self.peek()
                if k != "rat" or not v.isdigit():
                    self.fail("expected a nonnegative exponent after '@'")
                self.next()
                exp = int(v)
            return Leaf(value, exp)
        if kind == "sym" and value == "(":
            self.next()
            k, v, _, _ = self.peek()
            if k == "name" and v == "A" and self.tokens[self.i + 1][0] == "rat":
                self.next()
                wtok = self.next()
                if not wtok[1].isdigit() or int(wtok[1]) < 1:
                    raise TermSyntaxError("twist weight must be a positive integer", wtok[2], wtok[3])
                child = self.term()
                self.expect("sym", ")")
                return AlphaNode(int(wtok[1]), child)
            left = self.term()
            self.expect("sym", "*")
            right = self.term()
            self.expect("sym", ")")
            return Node(left, right)
        self.fail("expected a term")

    # lincomb := "0" | RATIONAL | part {"+" part}
    def lincomb(self) -> LinComb:
        out = LinComb.zero()
        while True:
            out = out + self.part()
            kind, value, _, _ = self.peek()
            if kind == "sym" and value == "+":
                self.next()
                continue
            break
        return out

    def part(self) -> LinComb:
        kind, value, _, _ = self.peek()
        if kind == "rat":
            self.next()
            coeff = Fraction(value)
            k, v, _, _ = self.peek()
            if k == "sym" and v == "*":
                self.next()
                return LinComb.of_term(normalize_term(self.term()), coeff)
            return LinComb.scalar(coeff)
        return LinComb.of_term(normalize_term(self.term()))

    def done(self):
        if self.peek()[0] != "eof":
            self.fail("trailing input")


def parse_raw_term(text: str) -> RawTerm:
    p = _Parser(text)
    t = p.term()
    p.done()
    return t


def parse_lincomb(text: str) -> LinComb:
    p = _Parser(text)
    v = p.lincomb()
    p.done()
    return v


def format_term(t: Term) -> str:
    if isinstance(t, Leaf):
        return t.name if t.exp == 0 else f"{t.name}@{t.exp}"
    if isinstance(t, Node):
        return f"({format_term(t.left)} * {format_term(t.right)})"
    raise TypeError(f"not a normalized term: {t!r}")


def format_lincomb(v: LinComb) -> str:
    if v.is_zero():
        return "0"
    parts = []
    if v.unit:
        parts.append(str(v.unit))
    for t, c in v.sorted_terms():
        if c == 1:
            parts.append(format_term(t))
        else:
            parts.append(f"{c} * {format_term(t)}")
    return " + ".join(parts)
