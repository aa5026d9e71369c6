"""The ``.mfw`` input language: AST, parser and printer.

Example::

    field Q;
    ring R { x:1 };
    section S = R + w:1 with f = x^2, g = w;
    mf E over (R, x^2) { d=[0]; e=[-1]; phi=[[x]]; psi=[[x]]; }
    query verify-theorem E E shifts -2..2 twists -3..3;

Statements end with ``;`` (optional after a ``}``).  ``#`` starts a comment.
A section name also names its extended ring, so ``mf P over (S, x^2 + w^2)``
is allowed.  Parsing checks syntax and name binding; building the actual
rings and factorizations happens in :mod:`mfw.runner`.

Query forms (options may come in any order)::

    query hom E T [twist N] [shift I] [witness];
    query homtable E T [shifts A..B] [twists A..B];
    query push E [section S];
    query verify-theorem E T [section S] [shifts A..B] [twists A..B] [delta auto|K] [sigma +1|-1];
    query verify-serre E T [twists A..B] [delta auto|K] [sigma +1|-1];
    query oracle E T [twist N] [shift I];
    query transpose R <polynomial>;
    query directed E1 E2 ... [section S] [delta K];
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import ParseError
from .expr import Expr, TokenStream, format_expr, parse_expr, tokenize


@dataclass(frozen=True)
class Range:
    lo: int
    hi: int

    def values(self) -> range:
        return range(self.lo, self.hi + 1)

    def __str__(self):
        return f"{self.lo}..{self.hi}"


@dataclass(frozen=True)
class FieldDecl:
    characteristic: int
    pos: tuple = field(default=None, compare=False)


@dataclass(frozen=True)
class RingDecl:
    name: str
    variables: tuple  # ((name, weight), ...)
    pos: tuple = field(default=None, compare=False)


@dataclass(frozen=True)
class SectionDecl:
    name: str
    ring: str
    var: str
    weight: int
    f: Expr
    g: Expr
    pos: tuple = field(default=None, compare=False)


@dataclass(frozen=True)
class MFDecl:
    name: str
    ring: str
    f: Expr
    d: Optional[tuple]
    e: Optional[tuple]
    phi: tuple
    psi: tuple
    pos: tuple = field(default=None, compare=False)


@dataclass(frozen=True)
class Query:
    kind: str
    args: tuple
    options: tuple  # ((key, value), ...) in source order
    poly: Optional[Expr] = None
    pos: tuple = field(default=None, compare=False)

    def option(self, key, default=None):
        for k, v in self.options:
            if k == key:
                return v
        return default


@dataclass(frozen=True)
class Program:
    statements: tuple

    @property
    def field(self) -> Optional[FieldDecl]:
        for s in self.statements:
            if isinstance(s, FieldDecl):
                return s
        return None

    @property
    def queries(self) -> list:
        return [s for s in self.statements if isinstance(s, Query)]

    @property
    def declarations(self) -> list:
        return [s for s in self.statements if not isinstance(s, (Query, FieldDecl))]


# option name -> value kind
_OPTIONS = {
    "twist": "int", "shift": "int", "witness": "flag", "shifts": "range", "twists": "range",
    "section": "name", "delta": "delta", "sigma": "sign",
}
# kind -> (number of positional MF names or "+", allowed options)
KINDS = {
    "hom": (2, {"twist", "shift", "witness"}),
    "homtable": (2, {"shifts", "twists"}),
    "push": (1, {"section"}),
    "verify-theorem": (2, {"section", "shifts", "twists", "delta", "sigma"}),
    "verify-serre": (2, {"twists", "delta", "sigma"}),
    "oracle": (2, {"twist", "shift"}),
    "transpose": (0, set()),
    "directed": ("+", {"section", "delta"}),
}
RESERVED = {"field", "ring", "section", "mf", "query", "over", "with", "auto", "Q", "GF"} | set(_OPTIONS)


class _Parser:
    def __init__(self, text: str):
        self.ts = TokenStream(tokenize(text))
        self.symbols: dict = {}  # name -> (kind, decl)

    def pos(self):
        t = self.ts.peek
        return (t.line, t.col)

    def name(self, what: str) -> str:
        return self.ts.expect_kind("ident", what).text

    def signed_int(self) -> int:
        sign = -1 if self.ts.accept("-") else 1
        if sign == 1:
            self.ts.accept("+")
        return sign * int(self.ts.expect_kind("int", "integer").text)

    def int_list(self) -> tuple:
        self.ts.expect("[")
        out = []
        if not self.ts.at("]"):
            out.append(self.signed_int())
            while self.ts.accept(","):
                out.append(self.signed_int())
        self.ts.expect("]")
        return tuple(out)

    def matrix(self) -> tuple:
        self.ts.expect("[")
        rows = []
        if not self.ts.at("]"):
            rows.append(self.row())
            while self.ts.accept(","):
                rows.append(self.row())
        self.ts.expect("]")
        return tuple(rows)

    def row(self) -> tuple:
        self.ts.expect("[")
        out = []
        if not self.ts.at("]"):
            out.append(parse_expr(self.ts))
            while self.ts.accept(","):
                out.append(parse_expr(self.ts))
        self.ts.expect("]")
        return tuple(out)

    def declare(self, name: str, kind: str, decl, pos):
        if name in RESERVED:
            raise ParseError(f"{name!r} is a reserved word", *pos)
        if name in self.symbols:
            raise ParseError(f"{name!r} is already declared", *pos)
        self.symbols[name] = (kind, decl)

    def lookup(self, name: str, kinds: tuple, pos):
        if name not in self.symbols:
            raise ParseError(f"unbound name {name!r}", *pos)
        kind, decl = self.symbols[name]
        if kind not in kinds:
            raise ParseError(f"{name!r} is a {kind}, expected {' or '.join(kinds)}", *pos)
        return kind, decl

    def end(self):
        self.ts.expect(";")

    # -- statements ----------------------------------------------------
    def program(self) -> Program:
        stmts = []
        seen_field = False
        while self.ts.peek.kind != "eof":
            tok = self.ts.peek
            if self.ts.at("field"):
                if seen_field:
                    raise ParseError("only one field declaration is allowed", tok.line, tok.col)
                seen_field = True
                stmts.append(self.field_decl())
            elif self.ts.at("ring"):
                stmts.append(self.ring_decl())
            elif self.ts.at("section"):
                stmts.append(self.section_decl())
            elif self.ts.at("mf"):
                stmts.append(self.mf_decl())
            elif self.ts.at("query"):
                stmts.append(self.query())
            else:
                self.ts.error(f"expected a declaration or query, found {tok.text!r}")
        return Program(tuple(stmts))

    def field_decl(self):
        pos = self.pos()
        self.ts.expect("field")
        if self.ts.accept("Q"):
            p = 0
        else:
            self.ts.expect("GF")
            self.ts.expect("(")
            p = int(self.ts.expect_kind("int", "prime").text)
            self.ts.expect(")")
        self.end()
        return FieldDecl(p, pos)

    def ring_decl(self):
        pos = self.pos()
        self.ts.expect("ring")
        name = self.name("ring name")
        self.ts.expect("{")
        variables = []
        while True:
            vpos = self.pos()
            v = self.name("variable name")
            self.ts.expect(":")
            w = int(self.ts.expect_kind("int", "weight").text)
            if any(v == u for u, _ in variables):
                raise ParseError(f"variable {v!r} declared twice", *vpos)
            variables.append((v, w))
            if not self.ts.accept(","):
                break
        self.ts.expect("}")
        self.ts.accept(";")
        decl = RingDecl(name, tuple(variables), pos)
        self.declare(name, "ring", decl, pos)
        return decl

    def section_decl(self):
        pos = self.pos()
        self.ts.expect("section")
        name = self.name("section name")
        self.ts.expect("=")
        rpos = self.pos()
        ring = self.name("ring name")
        self.lookup(ring, ("ring",), rpos)
        self.ts.expect("+")
        var = self.name("variable name")
        self.ts.expect(":")
        weight = int(self.ts.expect_kind("int", "weight").text)
        self.ts.expect("with")
        self.ts.expect("f")
        self.ts.expect("=")
        f = parse_expr(self.ts)
        self.ts.expect(",")
        self.ts.expect("g")
        self.ts.expect("=")
        g = parse_expr(self.ts)
        self.end()
        decl = SectionDecl(name, ring, var, weight, f, g, pos)
        self.declare(name, "section", decl, pos)
        return decl

    def mf_decl(self):
        pos = self.pos()
        self.ts.expect("mf")
        name = self.name("factorization name")
        self.ts.expect("over")
        self.ts.expect("(")
        rpos = self.pos()
        ring = self.name("ring name")
        self.lookup(ring, ("ring", "section"), rpos)
        self.ts.expect(",")
        f = parse_expr(self.ts)
        self.ts.expect(")")
        self.ts.expect("{")
        parts: dict = {}
        while not self.ts.at("}"):
            kpos = self.pos()
            key = self.name("d, e, phi or psi")
            if key not in ("d", "e", "phi", "psi"):
                raise ParseError(f"unknown field {key!r} (expected d, e, phi or psi)", *kpos)
            if key in parts:
                raise ParseError(f"{key} given twice", *kpos)
            self.ts.expect("=")
            parts[key] = self.int_list() if key in ("d", "e") else self.matrix()
            self.end()
        self.ts.expect("}")
        self.ts.accept(";")
        for key in ("phi", "psi"):
            if key not in parts:
                raise ParseError(f"mf {name} lacks {key}", *pos)
        decl = MFDecl(name, ring, f, parts.get("d"), parts.get("e"), parts["phi"], parts["psi"], pos)
        self.declare(name, "mf", decl, pos)
        return decl

    def kind(self) -> str:
        first = self.ts.expect_kind("ident", "query kind")
        text, end = first.text, first.col + len(first.text)
        # kinds like verify-theorem arrive as ident '-' ident with no spaces
        while (self.ts.at("-") and self.ts.peek.line == first.line and self.ts.peek.col == end):
            nxt = self.ts.tokens[self.ts.i + 1]
            if nxt.kind != "ident" or nxt.col != end + 1:
                break
            self.ts.next()
            self.ts.next()
            text += "-" + nxt.text
            end = nxt.col + len(nxt.text)
        if text not in KINDS:
            raise ParseError(f"unknown query kind {text!r} (known: {', '.join(sorted(KINDS))})",
                             first.line, first.col)
        return text

    def option_value(self, key: str):
        vk = _OPTIONS[key]
        if vk == "flag":
            return True
        if vk == "int":
            return self.signed_int()
        if vk == "range":
            lo = self.signed_int()
            self.ts.expect("..")
            hi = self.signed_int()
            return Range(lo, hi)
        if vk == "name":
            pos = self.pos()
            name = self.name("section name")
            self.lookup(name, ("section",), pos)
            return name
        if vk == "delta":
            if self.ts.accept("auto"):
                return "auto"
            return self.signed_int()
        if vk == "sign":
            pos = self.pos()
            v = self.signed_int()
            if v not in (1, -1):
                raise ParseError("sigma must be +1 or -1", *pos)
            return v

    def query(self):
        pos = self.pos()
        self.ts.expect("query")
        kind = self.kind()
        count, allowed = KINDS[kind]
        if kind == "transpose":
            rpos = self.pos()
            ring = self.name("ring name")
            self.lookup(ring, ("ring", "section"), rpos)
            poly = parse_expr(self.ts)
            self.end()
            return Query(kind, (ring,), (), poly, pos)
        args = []
        while self.ts.peek.kind == "ident" and self.ts.peek.text not in _OPTIONS:
            apos = self.pos()
            name = self.name("factorization name")
            self.lookup(name, ("mf",), apos)
            args.append(name)
        if count == "+" and not args:
            self.ts.error(f"{kind} needs at least one factorization")
        if count != "+" and len(args) != count:
            raise ParseError(f"{kind} takes {count} factorization name(s), got {len(args)}", *pos)
        options = []
        while not self.ts.at(";"):
            tok = self.ts.peek
            if tok.kind != "ident" or tok.text not in allowed:
                allowed_s = ", ".join(sorted(allowed)) or "none"
                self.ts.error(f"unexpected {tok.text or 'end of input'!r} in {kind} query "
                              f"(options: {allowed_s})")
            self.ts.next()
            if any(k == tok.text for k, _ in options):
                raise ParseError(f"option {tok.text!r} given twice", tok.line, tok.col)
            options.append((tok.text, self.option_value(tok.text)))
        self.end()
        if kind in ("verify-theorem", "push", "directed") and not any(k == "section" for k, _ in options):
            options.append(("section", self.default_section(args[0], kind, pos)))
        return Query(kind, tuple(args), tuple(options), None, pos)

    def default_section(self, mf: str, kind: str, pos) -> str:
        ring = self.symbols[mf][1].ring
        cands = [n for n, (k, d) in self.symbols.items() if k == "section" and d.ring == ring]
        if len(cands) != 1:
            raise ParseError(f"{kind} needs 'section <name>': {len(cands)} sections are declared "
                             f"over {ring}", *pos)
        return cands[0]


def parse_program(text: str) -> Program:
    """Parse and name-check a program; raises :class:`ParseError` with a position."""
    return _Parser(text).program()


# -- printing ----------------------------------------------------------------

def _ints(xs) -> str:
    return "[" + ", ".join(str(x) for x in xs) + "]"


def _mat(rows) -> str:
    return "[" + ", ".join("[" + ", ".join(format_expr(e) for e in r) + "]" for r in rows) + "]"


def _value(v) -> str:
    if v is True:
        return ""
    if isinstance(v, int) and not isinstance(v, bool):
        return str(v)
    return str(v)


def format_statement(s) -> str:
    if isinstance(s, FieldDecl):
        return f"field {'Q' if s.characteristic == 0 else f'GF({s.characteristic})'};"
    if isinstance(s, RingDecl):
        return f"ring {s.name} {{ " + ", ".join(f"{v}:{w}" for v, w in s.variables) + " };"
    if isinstance(s, SectionDecl):
        return (f"section {s.name} = {s.ring} + {s.var}:{s.weight} "
                f"with f = {format_expr(s.f)}, g = {format_expr(s.g)};")
    if isinstance(s, MFDecl):
        parts = []
        if s.d is not None:
            parts.append(f"d={_ints(s.d)};")
        if s.e is not None:
            parts.append(f"e={_ints(s.e)};")
        parts.append(f"phi={_mat(s.phi)};")
        parts.append(f"psi={_mat(s.psi)};")
        return f"mf {s.name} over ({s.ring}, {format_expr(s.f)}) {{ " + " ".join(parts) + " }"
    if isinstance(s, Query):
        words = ["query", s.kind, *s.args]
        if s.poly is not None:
            words.append(format_expr(s.poly))
        for k, v in s.options:
            words.append(k)
            if v is not True:
                words.append(_value(v))
        return " ".join(words) + ";"
    raise TypeError(f"not a statement: {s!r}")


def format_program(p: Program) -> str:
    return "".join(format_statement(s) + "\n" for s in p.statements)
