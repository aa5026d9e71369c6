"""Matrices of polynomials between twisted graded free modules.

Twist convention: ``M(n)_m = M_{n+m}``.  A degree-zero map ``R(s) -> R(t)``
is multiplication by a form of degree ``t - s``, so entry ``(j, i)`` of a
matrix from ``(+)_i R(source_i)`` to ``(+)_j R(target_j)`` has degree
``target_j - source_i + offset``.  The offset is the degree of the map as a
whole; psi of a factorization is stored with offset ``h``.
"""
from __future__ import annotations

from typing import Sequence

from .errors import DegreeError, RingError, ShapeError
from .poly import GradedRing, Poly


def _as_poly(ring: GradedRing, x) -> Poly:
    if isinstance(x, Poly):
        if x.ring != ring:
            raise RingError(f"entry {x} lives in {x.ring}, expected {ring}")
        return x
    if isinstance(x, str):
        return ring.parse(x)
    return ring.constant(x)


class GradedMatrix:
    """Validated homogeneous matrix; immutable once built."""

    __slots__ = ("ring", "target", "source", "entries", "offset", "_hash")

    def __init__(self, ring: GradedRing, target: Sequence[int], source: Sequence[int],
                 entries: Sequence[Sequence] = None, offset: int = 0, check: bool = True):
        self.ring = ring
        self.target = tuple(int(t) for t in target)
        self.source = tuple(int(s) for s in source)
        self.offset = int(offset)
        if entries is None:
            entries = [[ring.zero()] * len(self.source) for _ in self.target]
        rows = tuple(tuple(_as_poly(ring, x) for x in row) for row in entries)
        if len(rows) != len(self.target) or any(len(r) != len(self.source) for r in rows):
            raise ShapeError(
                f"entries of shape {len(rows)}x{len(rows[0]) if rows else 0} do not match "
                f"target {self.target} / source {self.source}")
        self.entries = rows
        self._hash = None
        if check:
            self._check_degrees()

    def _check_degrees(self):
        for j, row in enumerate(self.entries):
            for i, p in enumerate(row):
                if p.is_zero:
                    continue
                want = self.target[j] - self.source[i] + self.offset
                got = p.degree
                if got != want:
                    what = "inhomogeneous" if isinstance(got, str) else f"of degree {got}"
                    raise DegreeError(
                        f"entry ({j},{i}) = {p} is {what}; expected degree {want} "
                        f"(target {self.target[j]} - source {self.source[i]} + offset {self.offset})")

    @classmethod
    def identity_on(cls, ring: GradedRing, twists: Sequence[int]) -> "GradedMatrix":
        n = len(twists)
        return cls(ring, twists, twists,
                   [[ring.one() if i == j else ring.zero() for i in range(n)] for j in range(n)],
                   check=False)

    @classmethod
    def zero(cls, ring, target, source, offset=0) -> "GradedMatrix":
        return cls(ring, target, source, None, offset, check=False)

    @classmethod
    def scalar(cls, ring, p: Poly, twists, offset: int) -> "GradedMatrix":
        """``p`` times the identity, typed on ``twists`` with the given offset."""
        n = len(twists)
        return cls(ring, twists, twists,
                   [[p if i == j else ring.zero() for i in range(n)] for j in range(n)], offset)

    @classmethod
    def block(cls, blocks) -> "GradedMatrix":
        """Assemble a block matrix; rows of blocks must agree on target, columns on source."""
        ring = blocks[0][0].ring
        offset = blocks[0][0].offset
        target, source, rows = (), (), []
        for bi, brow in enumerate(blocks):
            t = brow[0].target
            for b in brow:
                if b.target != t:
                    raise ShapeError("block row has inconsistent targets")
                if b.offset != offset:
                    raise ShapeError("blocks carry different offsets")
            target += t
            for j in range(len(t)):
                rows.append([p for b in brow for p in b.entries[j]])
        for bj in range(len(blocks[0])):
            s = blocks[0][bj].source
            if any(brow[bj].source != s for brow in blocks):
                raise ShapeError("block column has inconsistent sources")
            source += s
        return cls(ring, target, source, rows, offset, check=False)

    # -- basic protocol ------------------------------------------------
    @property
    def shape(self):
        return (len(self.target), len(self.source))

    def __getitem__(self, ji) -> Poly:
        j, i = ji
        return self.entries[j][i]

    def __eq__(self, other):
        return (isinstance(other, GradedMatrix) and self.ring == other.ring
                and self.target == other.target and self.source == other.source
                and self.offset == other.offset and self.entries == other.entries)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.target, self.source, self.offset, self.entries))
        return self._hash

    def __reduce__(self):
        return (GradedMatrix, (self.ring, self.target, self.source, self.entries, self.offset, False))

    def __repr__(self):
        rows = "; ".join("[" + ", ".join(str(p) for p in r) + "]" for r in self.entries)
        return f"GradedMatrix([{rows}], target={self.target}, source={self.source}, offset={self.offset})"

    def to_lists(self) -> list:
        return [[str(p) for p in row] for row in self.entries]

    def is_zero(self) -> bool:
        return all(p.is_zero for row in self.entries for p in row)

    # -- arithmetic ----------------------------------------------------
    def _same_type(self, other: "GradedMatrix"):
        if self.ring != other.ring:
            raise RingError("matrices over different rings")
        if (self.target, self.source, self.offset) != (other.target, other.source, other.offset):
            raise ShapeError(
                f"cannot combine {self.target}<-{self.source} (offset {self.offset}) with "
                f"{other.target}<-{other.source} (offset {other.offset})")

    def __add__(self, other: "GradedMatrix") -> "GradedMatrix":
        self._same_type(other)
        rows = [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)]
        return GradedMatrix(self.ring, self.target, self.source, rows, self.offset, check=False)

    def __neg__(self) -> "GradedMatrix":
        rows = [[-a for a in r] for r in self.entries]
        return GradedMatrix(self.ring, self.target, self.source, rows, self.offset, check=False)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "GradedMatrix":
        """Multiply by a scalar, or by a homogeneous polynomial (its degree joins the offset)."""
        if isinstance(c, Poly):
            if c.is_zero:
                return GradedMatrix.zero(self.ring, self.target, self.source, self.offset)
            deg = c.degree
            if isinstance(deg, str):
                raise DegreeError(f"cannot scale by inhomogeneous {c}")
            rows = [[c * a for a in r] for r in self.entries]
            return GradedMatrix(self.ring, self.target, self.source, rows, self.offset + deg, check=False)
        rows = [[a * c for a in r] for r in self.entries]
        return GradedMatrix(self.ring, self.target, self.source, rows, self.offset, check=False)

    def compose(self, other: "GradedMatrix") -> "GradedMatrix":
        """``self o other``: requires ``self.source == other.target``; offsets add."""
        if self.ring != other.ring:
            raise RingError("matrices over different rings")
        if self.source != other.target:
            raise ShapeError(f"cannot compose: source {self.source} != target {other.target}")
        ring = self.ring
        n = len(self.source)
        rows = []
        for j in range(len(self.target)):
            row = []
            for i in range(len(other.source)):
                acc = ring.zero()
                for k in range(n):
                    a, b = self.entries[j][k], other.entries[k][i]
                    if a.terms and b.terms:
                        acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return GradedMatrix(ring, self.target, other.source, rows, self.offset + other.offset, check=False)

    __matmul__ = compose

    def retype(self, target, source, offset=0) -> "GradedMatrix":
        """Same entries viewed between other twists (degrees re-checked)."""
        return GradedMatrix(self.ring, target, source, self.entries, offset)

    def twist(self, n: int) -> "GradedMatrix":
        """The same map between modules twisted by ``n``."""
        return GradedMatrix(self.ring, [t + n for t in self.target], [s + n for s in self.source],
                            self.entries, self.offset, check=False)

    def map_entries(self, fn, ring=None, target=None, source=None, offset=None) -> "GradedMatrix":
        ring = ring or self.ring
        return GradedMatrix(ring, self.target if target is None else target,
                            self.source if source is None else source,
                            [[fn(p) for p in r] for r in self.entries],
                            self.offset if offset is None else offset)

    def embed(self, ring: GradedRing) -> "GradedMatrix":
        return self.map_entries(lambda p: p.embed(ring), ring=ring)

    def restrict(self, ring: GradedRing) -> "GradedMatrix":
        return self.map_entries(lambda p: p.restrict(ring), ring=ring)

    def substitute_zero(self, var: str) -> "GradedMatrix":
        return self.map_entries(lambda p: p.substitute_zero(var))

    def transpose_entries(self):
        return [list(col) for col in zip(*self.entries)]


def graded_matrix(ring, target, source, entries, offset=0) -> GradedMatrix:
    return GradedMatrix(ring, target, source, entries, offset)


def compose(A: GradedMatrix, B: GradedMatrix) -> GradedMatrix:
    return A.compose(B)


def identity_on(ring, twists) -> GradedMatrix:
    return GradedMatrix.identity_on(ring, twists)
