"""Tokenizer and expression trees for polynomial surface syntax.

Grammar (usual precedence, ``^`` binds tightest and takes an integer)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := INT | IDENT | '(' expr ')'

Division is only allowed by a nonzero integer constant; it exists so that
printed rational coefficients parse back.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

from .errors import ParseError

TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>\#[^\n]*)
    |(?P<range>\.\.)
    |(?P<int>\d+)
    |(?P<ident>[A-Za-z_][A-Za-z0-9_]*)
    |(?P<op>[-+*/^=(){}\[\],;:])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind not in ("ws", "comment"):
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


@dataclass(frozen=True)
class Num:
    value: int
    pos: tuple = field(default=None, compare=False)


@dataclass(frozen=True)
class Var:
    name: str
    pos: tuple = field(default=None, compare=False)


@dataclass(frozen=True)
class Neg:
    arg: "Expr"
    pos: tuple = field(default=None, compare=False)


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"
    pos: tuple = field(default=None, compare=False)


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exp: int
    pos: tuple = field(default=None, compare=False)


Expr = Union[Num, Var, Neg, BinOp, Pow]


class TokenStream:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.i]

    def next(self) -> Token:
        tok = self.tokens[self.i]
        if tok.kind != "eof":
            self.i += 1
        return tok

    def at(self, text: str) -> bool:
        tok = self.peek
        return tok.kind in ("op", "ident", "range") and tok.text == text

    def accept(self, text: str) -> Token | None:
        if self.at(text):
            return self.next()
        return None

    def expect(self, text: str) -> Token:
        tok = self.peek
        if not self.at(text):
            found = tok.text or "end of input"
            raise ParseError(f"expected {text!r}, found {found!r}", tok.line, tok.col)
        return self.next()

    def expect_kind(self, kind: str, what: str) -> Token:
        tok = self.peek
        if tok.kind != kind:
            found = tok.text or "end of input"
            raise ParseError(f"expected {what}, found {found!r}", tok.line, tok.col)
        return self.next()

    def error(self, message: str):
        tok = self.peek
        raise ParseError(message, tok.line, tok.col)


def parse_expr(ts: TokenStream) -> Expr:
    left = _term(ts)
    while ts.at("+") or ts.at("-"):
        tok = ts.next()
        left = BinOp(tok.text, left, _term(ts), (tok.line, tok.col))
    return left


def _term(ts):
    left = _unary(ts)
    while ts.at("*") or ts.at("/"):
        tok = ts.next()
        left = BinOp(tok.text, left, _unary(ts), (tok.line, tok.col))
    return left


def _unary(ts):
    if ts.at("-"):
        tok = ts.next()
        return Neg(_unary(ts), (tok.line, tok.col))
    return _power(ts)


def _power(ts):
    base = _atom(ts)
    if ts.at("^"):
        tok = ts.next()
        exp = ts.expect_kind("int", "integer exponent")
        return Pow(base, int(exp.text), (tok.line, tok.col))
    return base


def _atom(ts):
    tok = ts.peek
    if tok.kind == "int":
        ts.next()
        return Num(int(tok.text), (tok.line, tok.col))
    if tok.kind == "ident":
        ts.next()
        return Var(tok.text, (tok.line, tok.col))
    if ts.at("("):
        ts.next()
        inner = parse_expr(ts)
        ts.expect(")")
        return inner
    ts.error(f"expected a polynomial term, found {tok.text or 'end of input'!r}")


def parse_expression(text: str) -> Expr:
    ts = TokenStream(tokenize(text))
    expr = parse_expr(ts)
    if ts.peek.kind != "eof":
        ts.error(f"unexpected {ts.peek.text!r} after expression")
    return expr


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def format_expr(e: Expr, prec: int = 0) -> str:
    """Print with the minimum parentheses needed to parse back to ``e``."""
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Neg):
        s = "-" + format_expr(e.arg, 3)
        return f"({s})" if prec > 2 else s
    if isinstance(e, Pow):
        s = f"{format_expr(e.base, 4)}^{e.exp}"
        return f"({s})" if prec > 3 else s
    p = _PREC[e.op]
    s = f"{format_expr(e.left, p)} {e.op} {format_expr(e.right, p + 1)}"
    if e.op in "*/":
        s = f"{format_expr(e.left, p)}{e.op}{format_expr(e.right, p + 1)}"
    return f"({s})" if p < prec else s


def evaluate(e: Expr, ring):
    """Evaluate an expression tree to a Poly of ``ring``."""
    if isinstance(e, Num):
        return ring.constant(e.value)
    if isinstance(e, Var):
        if e.name not in ring.names:
            line, col = e.pos or (None, None)
            raise ParseError(f"unknown variable {e.name!r} (ring has {', '.join(ring.names)})", line, col)
        return ring.gen(e.name)
    if isinstance(e, Neg):
        return -evaluate(e.arg, ring)
    if isinstance(e, Pow):
        return evaluate(e.base, ring) ** e.exp
    left = evaluate(e.left, ring)
    if e.op == "/":
        right = e.right
        if not isinstance(right, Num) or right.value == 0:
            line, col = e.pos or (None, None)
            raise ParseError("division is only allowed by a nonzero integer", line, col)
        return left * ring.field.inv(ring.field(right.value))
    right = evaluate(e.right, ring)
    if e.op == "+":
        return left + right
    if e.op == "-":
        return left - right
    return left * right
