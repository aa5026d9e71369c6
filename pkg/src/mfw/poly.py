"""Weighted Z-graded polynomial rings with exact coefficients.

A :class:`GradedRing` is ``k[x_1, ..., x_n]`` with positive integer weights,
so every graded piece is finite dimensional.  :class:`Poly` values are
immutable; their terms are kept in a dict keyed by exponent tuples and are
printed in graded-lex order (higher weighted degree first, then
lexicographically descending exponents).
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .errors import RingError
from .expr import evaluate, parse_expression
from .scalars import QQ, Field, make_field

INHOMOGENEOUS = "inhomogeneous"


@lru_cache(maxsize=None)
def _monomials(weights: tuple, m: int) -> tuple:
    if m < 0:
        return ()
    if not weights:
        return ((),) if m == 0 else ()
    w0, rest = weights[0], weights[1:]
    out = []
    for k in range(m // w0, -1, -1):
        for tail in _monomials(rest, m - k * w0):
            out.append((k,) + tail)
    return tuple(out)


class GradedRing:
    """Polynomial ring over ``field`` with variable ``names`` of given ``weights``."""

    __slots__ = ("names", "weights", "field", "_index", "_hash")

    def __init__(self, names: Sequence[str], weights: Sequence[int], field: Field = QQ):
        names = tuple(names)
        weights = tuple(int(w) for w in weights)
        if len(names) != len(weights):
            raise RingError("names and weights differ in length")
        if len(set(names)) != len(names):
            raise RingError(f"duplicate variable name in {names}")
        for n, w in zip(names, weights):
            if not n.isidentifier():
                raise RingError(f"bad variable name {n!r}")
            if w < 1:
                raise RingError(f"weight of {n} must be positive, got {w}")
        self.names = names
        self.weights = weights
        self.field = make_field(field)
        self._index = {n: i for i, n in enumerate(names)}
        self._hash = hash((names, weights, self.field))

    def __eq__(self, other):
        return (isinstance(other, GradedRing) and self.names == other.names
                and self.weights == other.weights and self.field == other.field)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        vs = ", ".join(f"{n}:{w}" for n, w in zip(self.names, self.weights))
        return f"GradedRing({self.field.name}[{vs}])"

    def __reduce__(self):
        return (GradedRing, (self.names, self.weights, self.field))

    @property
    def ngens(self) -> int:
        return len(self.names)

    @property
    def a_invariant(self) -> int:
        """Gorenstein a-invariant of a weighted polynomial ring: minus the weight sum."""
        return -sum(self.weights)

    @property
    def krull_dim(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise RingError(f"{name!r} is not a variable of {self}") from None

    def gen(self, name: str) -> "Poly":
        e = [0] * self.ngens
        e[self.index(name)] = 1
        return Poly(self, {tuple(e): self.field.one})

    def gens(self) -> list["Poly"]:
        return [self.gen(n) for n in self.names]

    def constant(self, c) -> "Poly":
        c = self.field(c)
        return Poly(self, {(0,) * self.ngens: c} if c else {})

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.constant(1)

    def monomial(self, exp, coeff=1) -> "Poly":
        c = self.field(coeff)
        return Poly(self, {tuple(exp): c} if c else {})

    def weighted_degree(self, exp) -> int:
        return sum(e * w for e, w in zip(exp, self.weights))

    def monomials_of_degree(self, m: int) -> tuple:
        return _monomials(self.weights, m)

    def dim(self, m: int) -> int:
        """Dimension of the graded piece of degree ``m``."""
        return len(_monomials(self.weights, m))

    def parse(self, text: str) -> "Poly":
        return evaluate(parse_expression(text), self)

    __call__ = parse

    def extend(self, wname: str, a: int) -> "GradedRing":
        """``R (x) k[w]`` with ``deg w = a``; R sits inside as the first variables."""
        if wname in self._index:
            raise RingError(f"variable {wname!r} already in {self}")
        return GradedRing(self.names + (wname,), self.weights + (a,), self.field)

    def with_field(self, field) -> "GradedRing":
        return GradedRing(self.names, self.weights, field)

    def contains_ring(self, sub: "GradedRing") -> bool:
        n = sub.ngens
        return (self.field == sub.field and self.names[:n] == sub.names
                and self.weights[:n] == sub.weights)


def make_ring(names, weights, field=QQ) -> GradedRing:
    return GradedRing(names, weights, field)


def extend_ring(R: GradedRing, wname: str, a: int) -> GradedRing:
    return R.extend(wname, a)


def _term_key(ring, exp):
    return (-ring.weighted_degree(exp), tuple(-e for e in exp))


class Poly:
    """Immutable polynomial; ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: GradedRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    @classmethod
    def from_terms(cls, ring: GradedRing, items: Iterable) -> "Poly":
        f = ring.field
        acc: dict = {}
        for exp, c in items:
            exp = tuple(exp)
            if len(exp) != ring.ngens or min(exp, default=0) < 0:
                raise RingError(f"bad exponent {exp} for {ring}")
            acc[exp] = f.reduce(acc.get(exp, 0) + f(c))
        return cls(ring, {e: c for e, c in acc.items() if c})

    # -- arithmetic ----------------------------------------------------
    def _check(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._check(other)
        f = self.ring.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = f.reduce(out.get(e, 0) + c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        f = self.ring.field
        return Poly(self.ring, {e: f.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            f = self.ring.field
            c = f(other)
            if not c:
                return self.ring.zero()
            return Poly(self.ring, {e: f.reduce(v * c) for e, v in self.terms.items()})
        other = self._check(other)
        f = self.ring.field
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        p = f.characteristic
        if p:
            return Poly(self.ring, {e: c % p for e, c in out.items() if c % p})
        return Poly(self.ring, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = self.ring.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __reduce__(self):
        return (Poly, (self.ring, self.terms))

    # -- structure -----------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: _term_key(self.ring, t[0]))

    def degrees(self) -> set:
        return {self.ring.weighted_degree(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self):
        """Weighted degree; None for zero, :data:`INHOMOGENEOUS` when terms disagree."""
        ds = self.degrees()
        if not ds:
            return None
        if len(ds) > 1:
            return INHOMOGENEOUS
        return ds.pop()

    def variables(self) -> set:
        return {self.ring.names[i] for e in self.terms for i, k in enumerate(e) if k}

    def substitute_zero(self, var: str) -> "Poly":
        i = self.ring.index(var)
        return Poly(self.ring, {e: c for e, c in self.terms.items() if e[i] == 0})

    def divide_by_var(self, var: str) -> "Poly":
        """Exact division by a variable; every term must contain it."""
        i = self.ring.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                raise RingError(f"{self} is not divisible by {var}")
            out[e[:i] + (e[i] - 1,) + e[i + 1:]] = c
        return Poly(self.ring, out)

    def embed(self, ring: GradedRing) -> "Poly":
        """Image under the inclusion of ``self.ring`` as the leading variables of ``ring``."""
        if ring == self.ring:
            return self
        if not ring.contains_ring(self.ring):
            raise RingError(f"{self.ring} does not embed in {ring}")
        pad = (0,) * (ring.ngens - self.ring.ngens)
        return Poly(ring, {e + pad: c for e, c in self.terms.items()})

    def restrict(self, ring: GradedRing) -> "Poly":
        """Inverse of :meth:`embed`; fails if trailing variables occur."""
        if ring == self.ring:
            return self
        if not self.ring.contains_ring(ring):
            raise RingError(f"{ring} is not a subring of {self.ring}")
        n = ring.ngens
        out = {}
        for e, c in self.terms.items():
            if any(e[n:]):
                raise RingError(f"{self} involves variables outside {ring}")
            out[e[:n]] = c
        return Poly(ring, out)

    def with_field(self, ring: GradedRing) -> "Poly":
        """Re-read the (integer or rational) coefficients in another field."""
        return Poly.from_terms(ring, [(e, c) for e, c in self.terms.items()])

    # -- printing ------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        f = self.ring.field
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(self.ring.names, exp) if k
            )
            neg = False
            if not f.characteristic and c < 0:
                neg, c = True, -c
            cs = f.to_str(c)
            if not mono:
                body = cs
            elif cs == "1":
                body = mono
            elif "/" in cs:
                num, den = cs.split("/")
                body = (mono if num == "1" else f"{num}*{mono}") + f"/{den}"
            else:
                body = f"{cs}*{mono}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({self})"


def parse_poly(text: str, ring: GradedRing) -> Poly:
    return ring.parse(text)


def degree_of(p: Poly):
    return p.degree


def monomials_of_degree(ring: GradedRing, m: int) -> tuple:
    return ring.monomials_of_degree(m)
