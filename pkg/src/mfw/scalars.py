"""Exact coefficient fields and dense/sparse linear algebra over them.

Two kinds of field are supported: the rationals (elements are
``gmpy2.mpq``) and prime fields GF(p) with p < 2**31 (elements are Python
ints in ``[0, p)``).  No floating point appears anywhere.

Most of the package talks to linear algebra through :class:`Echelon`, an
incrementally maintained *reduced* row echelon basis of sparse rows
(``dict`` column -> value).  Because the reduced echelon form of a row
space is unique, every basis produced here is independent of the order in
which rows were fed in.

    >>> Q = make_field("Q")
    >>> Matrix(Q, [[1, 2], [2, 4]]).nullspace()
    [(-2, 1)]
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import gmpy2

from .errors import FieldError

__all__ = ["Field", "make_field", "QQ", "Echelon", "Matrix", "nullspace", "rank"]

_MAX_PRIME = 2**31


@dataclass(frozen=True)
class Field:
    """A coefficient field: ``characteristic == 0`` means the rationals."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p < 0:
            raise FieldError(f"negative characteristic {p}")
        if p:
            if p >= _MAX_PRIME:
                raise FieldError(f"modulus {p} is not below 2^31")
            if not gmpy2.is_prime(p):
                raise FieldError(f"modulus {p} is not prime")

    @property
    def is_prime_field(self) -> bool:
        return self.characteristic != 0

    @property
    def name(self) -> str:
        return f"GF({self.characteristic})" if self.characteristic else "Q"

    def __repr__(self):
        return f"Field({self.name})"

    def __call__(self, value):
        """Coerce an int, Fraction, mpq or ``"a/b"`` string into the field."""
        p = self.characteristic
        if isinstance(value, str):
            value = Fraction(value)
        if not p:
            if isinstance(value, Fraction):
                return gmpy2.mpq(value.numerator, value.denominator)
            return gmpy2.mpq(value)
        if isinstance(value, int):
            return value % p
        q = gmpy2.mpq(value)
        den = int(q.denominator) % p
        if den == 0:
            raise FieldError(f"{value} has no image in {self.name}")
        return int(q.numerator) * pow(den, -1, p) % p

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def reduce(self, x):
        return x % self.characteristic if self.characteristic else x

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic:
            return pow(int(x), -1, self.characteristic)
        return 1 / x

    def neg(self, x):
        return (-x) % self.characteristic if self.characteristic else -x

    def to_str(self, x) -> str:
        if self.characteristic:
            return str(int(x))
        q = gmpy2.mpq(x)
        if q.denominator == 1:
            return str(int(q.numerator))
        return f"{int(q.numerator)}/{int(q.denominator)}"

    def to_json(self, x):
        """Integers stay integers; non-integral rationals become ``"a/b"``."""
        if self.characteristic:
            return int(x)
        q = gmpy2.mpq(x)
        return int(q.numerator) if q.denominator == 1 else self.to_str(q)


QQ = Field(0)


def make_field(spec) -> Field:
    """Build a field from ``"Q"``, ``"GF(p)"``, ``"GF:p"``, ``0`` or a prime ``p``."""
    if isinstance(spec, Field):
        return spec
    if isinstance(spec, int):
        return Field(spec)
    text = str(spec).strip().replace(" ", "")
    if text.upper() in ("Q", "QQ", "RATIONALS"):
        return QQ
    for prefix, suffix in (("GF(", ")"), ("GF:", "")):
        if text.upper().startswith(prefix) and text.endswith(suffix):
            body = text[len(prefix): len(text) - len(suffix)]
            try:
                return Field(int(body))
            except ValueError:
                break
    raise FieldError(f"unrecognised field {spec!r}")


class Echelon:
    """Reduced row echelon basis of a growing row space.

    Rows are sparse dicts ``{column: value}``; every stored row has pivot
    value 1 and no other stored pivot column appears in it.
    """

    def __init__(self, field: Field):
        self.field = field
        self.pivots: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        """Remainder of ``row`` after elimination against the stored basis."""
        r = dict(row)
        piv = self.pivots
        p = self.field.characteristic
        for c in [c for c in r if c in piv]:
            coef = r[c]
            for k, v in piv[c].items():
                nv = r.get(k, 0) - coef * v
                if p:
                    nv %= p
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
        return r

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)

    def add(self, row: dict) -> bool:
        """Insert a row; return True when the rank went up."""
        r = self.reduce(row)
        if not r:
            return False
        p = self.field.characteristic
        c = min(r)
        inv = self.field.inv(r[c])
        if p:
            r = {k: v * inv % p for k, v in r.items()}
        else:
            r = {k: v * inv for k, v in r.items()}
        for prow in self.pivots.values():
            coef = prow.get(c)
            if coef is None:
                continue
            for k, v in r.items():
                nv = prow.get(k, 0) - coef * v
                if p:
                    nv %= p
                if nv:
                    prow[k] = nv
                else:
                    prow.pop(k, None)
        self.pivots[c] = r
        return True

    def extend(self, rows: Iterable[dict]) -> list[int]:
        """Add rows in order; return indices of those that raised the rank."""
        return [i for i, row in enumerate(rows) if self.add(row)]

    def basis(self) -> list[dict]:
        return [dict(self.pivots[c]) for c in sorted(self.pivots)]

    def kernel(self, ncols: int) -> list[dict]:
        """Right kernel of the stored rows, one vector per free column (ascending)."""
        piv = self.pivots
        free = [c for c in range(ncols) if c not in piv]
        by_free: dict[int, dict] = {c: {c: self.field.one} for c in free}
        for pc, prow in piv.items():
            for k, v in prow.items():
                if k != pc:
                    by_free[k][pc] = self.field.neg(v)
        return [by_free[c] for c in free]


@dataclass(frozen=True)
class Matrix:
    """Dense matrix over a field, stored row-major as nested tuples."""

    field: Field
    rows_: tuple

    def __init__(self, field: Field, rows: Sequence[Sequence], ncols: int | None = None):
        data = tuple(tuple(field(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        if any(len(row) != ncols for row in data):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows_", data)
        object.__setattr__(self, "_ncols", ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows_)

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def entries(self) -> tuple:
        return tuple(x for row in self.rows_ for x in row)

    def _echelon(self) -> Echelon:
        ech = Echelon(self.field)
        for row in self.rows_:
            ech.add({j: x for j, x in enumerate(row) if x})
        return ech

    def rank(self) -> int:
        return self._echelon().rank

    def rref(self) -> "Matrix":
        basis = self._echelon().basis()
        z = self.field.zero
        return Matrix(self.field, [[b.get(j, z) for j in range(self.ncols)] for b in basis], self.ncols)

    def nullspace(self) -> list[tuple]:
        z = self.field.zero
        return [tuple(v.get(j, z) for j in range(self.ncols))
                for v in self._echelon().kernel(self.ncols)]

    def solve(self, rhs: Sequence):
        """One solution of ``M x = rhs`` (free variables set to zero), or None."""
        f = self.field
        aug = Echelon(f)
        n = self.ncols
        for row, b in zip(self.rows_, rhs):
            r = {j: x for j, x in enumerate(row) if x}
            if f(b):
                r[n] = f(b)
            aug.add(r)
        if n in aug.pivots:
            return None
        x = [f.zero] * n
        for c, prow in aug.pivots.items():
            x[c] = prow.get(n, f.zero)
        return tuple(x)


def nullspace(field: Field, rows: Sequence[Sequence]) -> list[tuple]:
    return Matrix(field, rows).nullspace()


def rank(field: Field, rows: Sequence[Sequence]) -> int:
    return Matrix(field, rows).rank()
