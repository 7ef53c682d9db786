"""Text format for rational functions: parse and print.

Accepts integer or rational coefficients, the variable x, the operators
+ - * / ^ and parentheses, e.g. "(x+4*x^2+x^3)/(1-x)^4".  Evaluation runs
in the fraction field of polynomials, so intermediate terms may be improper;
the final value must land in the proper space or construction fails.
Printing goes through format_ratfun, and print-then-parse is the identity
on the printed representation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import HeckeError
from .polynomial import Poly
from .ratfun import RatFun, format_ratfun


class ParseError(HeckeError):
    """Malformed rational function text."""


@dataclass
class _Token:
    kind: str  # 'int', 'x', or one of + - * / ^ ( )
    value: int = 0
    pos: int = 0


def _tokenize(text: str) -> list[_Token]:
    out: list[_Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(_Token("int", int(text[i:j]), i))
            i = j
            continue
        if ch == "x":
            out.append(_Token("x", 0, i))
            i += 1
            continue
        if ch in "+-*/^()":
            out.append(_Token(ch, 0, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r} at position {i}")
    return out


@dataclass
class _Frac:
    """Unreduced polynomial fraction; den is never the zero polynomial."""

    num: Poly
    den: Poly

    def __add__(self, other: _Frac) -> _Frac:
        return _Frac(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: _Frac) -> _Frac:
        return _Frac(self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other: _Frac) -> _Frac:
        return _Frac(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: _Frac) -> _Frac:
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero in rational function text")
        return _Frac(self.num * other.den, self.den * other.num)

    def __neg__(self) -> _Frac:
        return _Frac(-self.num, self.den)

    def pow(self, k: int) -> _Frac:
        return _Frac(self.num**k, self.den**k)


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i].kind if self.i < len(self.tokens) else None

    def take(self) -> _Token:
        if self.i >= len(self.tokens):
            raise ParseError("unexpected end of input")
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.take()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r} at position {tok.pos}")
        return tok

    def parse_expr(self) -> _Frac:
        value = self.parse_term()
        while self.peek() in ("+", "-"):
            op = self.take().kind
            rhs = self.parse_term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def parse_term(self) -> _Frac:
        value = self.parse_factor()
        while self.peek() in ("*", "/"):
            op = self.take().kind
            rhs = self.parse_factor()
            value = value * rhs if op == "*" else value / rhs
        return value

    def parse_factor(self) -> _Frac:
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take().kind == "-":
                sign = -sign
        value = self.parse_atom()
        if self.peek() == "^":
            self.take()
            tok = self.expect("int")
            value = value.pow(tok.value)
        return -value if sign < 0 else value

    def parse_atom(self) -> _Frac:
        tok = self.take()
        if tok.kind == "int":
            return _Frac(Poly([tok.value]), Poly([1]))
        if tok.kind == "x":
            return _Frac(Poly([0, 1]), Poly([1]))
        if tok.kind == "(":
            inner = self.parse_expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected token {tok.kind!r} at position {tok.pos}")


def parse_ratfun(text: str) -> RatFun:
    """Parse text into a RatFun; degree and pole conditions are enforced."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty input")
    parser = _Parser(tokens)
    value = parser.parse_expr()
    if parser.i != len(tokens):
        tok = parser.tokens[parser.i]
        raise ParseError(f"trailing input at position {tok.pos}")
    return RatFun(value.num, value.den)


def print_ratfun(f: RatFun) -> str:
    return format_ratfun(f)
