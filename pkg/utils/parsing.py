"""
Input parsing and scalar formatting
Handles conversions between command-line text and exact values
"""

from __future__ import annotations

import re
from fractions import Fraction

from cfrac.errors import InputParseError, PerfectSquare
from cfrac.exact import IOTA, GaussianInt, GaussianRational, Mat2, QuadExtElem

_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+)|(?P<sqrt>sqrt|√)|(?P<imag>[ij])|(?P<op>[-+*/()]))")
_GAUSS_RATIONAL_RE = re.compile(r"^\((?P<num>[^()]+)\)/(?P<den>[+-]?\d+)$")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise InputParseError(f"Unexpected character {text[pos]!r} at {pos} in {text!r}")
        kind = m.lastgroup
        tokens.append((kind, m.group(kind)))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return tokens


class _Parser:
    """
    Recursive descent over
        expr   := term (("+" | "-") term)*
        term   := unary (("*" | "/")? unary)*     juxtaposition multiplies
        unary  := "-" unary | "+" unary | atom
        atom   := NUMBER | "i" | sqrt "(" expr ")" | "(" expr ")"
    producing a small tuple tree
    """

    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self, value=None):
        kind, tok = self.peek()
        if kind is None or (value is not None and tok != value):
            raise InputParseError(f"Expected {value or 'more input'} in {self.text!r}")
        self.pos += 1
        return kind, tok

    def parse(self):
        node = self.expr()
        if self.pos != len(self.tokens):
            raise InputParseError(f"Trailing input {self.peek()[1]!r} in {self.text!r}")
        return node

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("+", "-"):
            _, op = self.take()
            node = ("add" if op == "+" else "sub", node, self.term())
        return node

    def term(self):
        node = self.unary()
        while True:
            kind, tok = self.peek()
            if tok in ("*", "/"):
                self.take()
                node = ("mul" if tok == "*" else "div", node, self.unary())
            elif kind in ("num", "sqrt", "imag") or tok == "(":
                node = ("mul", node, self.unary())
            else:
                return node

    def unary(self):
        tok = self.peek()[1]
        if tok == "-":
            self.take()
            return ("neg", self.unary())
        if tok == "+":
            self.take()
            return self.unary()
        return self.atom()

    def atom(self):
        kind, tok = self.take()
        if kind == "num":
            return ("num", int(tok))
        if kind == "imag":
            return ("imag",)
        if kind == "sqrt":
            # √ binds the next atom; sqrt always takes parentheses
            if tok == "√":
                return ("sqrt", self.atom())
            self.take("(")
            inner = self.expr()
            self.take(")")
            return ("sqrt", inner)
        if tok == "(":
            inner = self.expr()
            self.take(")")
            return inner
        raise InputParseError(f"Unexpected {tok!r} in {self.text!r}")


def _walk(node, leaf, sqrt, div):
    op = node[0]
    if op in ("num", "imag"):
        return leaf(node)
    if op == "sqrt":
        return sqrt(node)
    if op == "neg":
        return -_walk(node[1], leaf, sqrt, div)
    a = _walk(node[1], leaf, sqrt, div)
    b = _walk(node[2], leaf, sqrt, div)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    return div(a, b)


def _scalar_value(node) -> GaussianRational:
    def leaf(n):
        return GaussianRational.coerce(n[1] if n[0] == "num" else IOTA)

    def sqrt(_):
        raise InputParseError("Nested square roots are not supported")

    def div(a, b):
        if not b:
            raise InputParseError("Division by zero")
        return a / b

    return _walk(node, leaf, sqrt, div)


def _radicands(node, out: list):
    if node[0] == "sqrt":
        out.append(node[1])
    for child in node[1:]:
        if isinstance(child, tuple):
            _radicands(child, out)
    return out


def _has_imag(node) -> bool:
    if node[0] == "imag":
        return True
    return any(isinstance(c, tuple) and _has_imag(c) for c in node[1:])


def _integral_radicand(value: GaussianRational, gaussian: bool):
    if value.den != 1:
        raise InputParseError(f"Radicand {value} is not integral")
    if gaussian:
        return value.num
    return value.num.re


def parse_surd(text: str, gaussian: bool = False) -> QuadExtElem:
    """
    Parse "sqrt(N)", "(a + b sqrt(N))/c", "4/3 + sqrt(3)/6", "sqrt(9+10i)"

    A Gaussian radicand or an "i" anywhere makes the value Gaussian;
    gaussian=True forces it.

    Raises:
        InputParseError: bad syntax, several radicands, non-integral radicand
        PerfectSquare: no square root at all (the value is rational)
    """
    tree = _Parser(text).parse()
    radicand_nodes = _radicands(tree, [])
    if not radicand_nodes:
        raise PerfectSquare(f"{text!r} has no square root, so it is rational")
    values = [_scalar_value(n) for n in radicand_nodes]
    if any(v != values[0] for v in values[1:]):
        raise InputParseError(f"Only one radicand per value, got {[str(v) for v in values]}")
    gaussian = gaussian or _has_imag(tree)
    N = _integral_radicand(values[0], gaussian)

    def leaf(n):
        return QuadExtElem(n[1] if n[0] == "num" else IOTA, 0, N)

    def sqrt(_):
        return QuadExtElem.sqrt(N)

    def div(a, b):
        try:
            return a / b
        except ZeroDivisionError:
            raise InputParseError(f"Division by zero in {text!r}") from None

    return _walk(tree, leaf, sqrt, div)


def parse_index(text: str) -> int:
    try:
        m = int(str(text).strip())
    except ValueError:
        raise InputParseError(f"Not an index: {text!r}") from None
    if m < -1:
        raise InputParseError(f"Index must be >= -1, got {m}")
    return m


def parse_m_list(text: str) -> list[int]:
    """Comma-separated indices; empty lists are a usage error"""
    items = [s for s in str(text).replace(" ", "").split(",") if s]
    if not items:
        raise InputParseError("Empty m-list")
    return [parse_index(s) for s in items]


def format_scalar(value) -> str:
    """Decimal for ints, "a+bi" for Gaussian integers, "p/q" for rationals"""
    if isinstance(value, bool):
        raise TypeError("Booleans are not scalars")
    if isinstance(value, GaussianRational):
        if value.num.im == 0:
            return format_scalar(value.real)
        return str(value.num) if value.den == 1 else str(value)
    if isinstance(value, GaussianInt) and value.im == 0:
        return str(value.re)
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    return str(value)


def parse_scalar(text: str):
    """
    Inverse of format_scalar

    Raises:
        InputParseError
    """
    s = str(text).replace(" ", "")
    try:
        m = _GAUSS_RATIONAL_RE.match(s)
        if m:
            return GaussianRational(GaussianInt.parse(m.group("num")), int(m.group("den")))
        if s and s[-1] in "ij":
            return GaussianInt.parse(s)
        if "/" in s:
            return Fraction(s)
        return int(s)
    except (ValueError, ZeroDivisionError) as e:
        raise InputParseError(f"Failed to parse scalar {text!r}: {e}") from None


def format_matrix(m: Mat2) -> list[list[str]]:
    return [[format_scalar(m.a), format_scalar(m.b)], [format_scalar(m.c), format_scalar(m.d)]]


def format_elem(elem: QuadExtElem) -> str:
    return f"{format_scalar(elem.u)} + ({format_scalar(elem.v)})*sqrt({format_scalar(elem.N)})"
