"""Graded matrix factorizations and morphisms between them.

A factorization of a homogeneous ``f`` of degree ``h`` consists of free
modules ``M0 = (+) R(d_i)`` and ``M1 = (+) R(e_i)`` with ``phi: M1 -> M0``
(offset 0) and ``psi: M0 -> M1`` (offset ``h``) such that both composites
are ``f`` times the identity.

Suspension: ``E[1] = (M1(h) <-> M0)`` with maps ``(-psi, -phi)``.  With these
signs ``E[2]`` equals ``E(h)`` on the nose.
"""
from __future__ import annotations

from typing import Sequence

from .errors import CocycleError, DegreeError, FactorizationError, RingError, ShapeError
from .gmatrix import GradedMatrix
from .poly import GradedRing, Poly


class MatrixFactorization:
    """A validated graded matrix factorization; hashable and immutable."""

    __slots__ = ("ring", "f", "h", "d", "e", "phi", "psi", "_hash")

    def __init__(self, ring: GradedRing, f: Poly, d: Sequence[int], e: Sequence[int],
                 phi, psi, check: bool = True):
        if not isinstance(f, Poly):
            f = ring.parse(f) if isinstance(f, str) else ring.constant(f)
        if f.ring != ring:
            raise RingError(f"f = {f} does not live in {ring}")
        if f.is_zero:
            raise FactorizationError("f must be nonzero")
        h = f.degree
        if isinstance(h, str):
            raise DegreeError(f"f = {f} is not homogeneous")
        d, e = tuple(d), tuple(e)
        if len(d) != len(e):
            raise ShapeError(f"d has {len(d)} twists but e has {len(e)}")
        if not isinstance(phi, GradedMatrix):
            phi = GradedMatrix(ring, d, e, phi, 0)
        if not isinstance(psi, GradedMatrix):
            psi = GradedMatrix(ring, e, d, psi, h)
        if (phi.target, phi.source, phi.offset) != (d, e, 0):
            raise ShapeError("phi must map (+)R(e_i) -> (+)R(d_i) with offset 0")
        if (psi.target, psi.source, psi.offset) != (e, d, h):
            raise ShapeError(f"psi must map (+)R(d_i) -> (+)R(e_i) with offset h = {h}")
        self.ring, self.f, self.h, self.d, self.e = ring, f, h, d, e
        self.phi, self.psi = phi, psi
        self._hash = None
        if check:
            self._check_identities()

    def _check_identities(self):
        f, ring = self.f, self.ring
        for name, prod in (("phi*psi", self.phi @ self.psi), ("psi*phi", self.psi @ self.phi)):
            for j, row in enumerate(prod.entries):
                for i, p in enumerate(row):
                    want = f if i == j else ring.zero()
                    if p != want:
                        raise FactorizationError(
                            f"{name} entry ({j},{i}) is {p}, expected {want}")

    @property
    def rank(self) -> int:
        return len(self.d)

    def __eq__(self, other):
        return (isinstance(other, MatrixFactorization) and self.f == other.f
                and self.d == other.d and self.e == other.e
                and self.phi == other.phi and self.psi == other.psi)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.f, self.d, self.e, self.phi, self.psi))
        return self._hash

    def __reduce__(self):
        return (MatrixFactorization, (self.ring, self.f, self.d, self.e, self.phi, self.psi, False))

    def __repr__(self):
        return (f"MatrixFactorization(f={self.f}, d={self.d}, e={self.e}, "
                f"phi={self.phi.to_lists()}, psi={self.psi.to_lists()})")

    # -- constructions -------------------------------------------------
    def twist(self, n: int) -> "MatrixFactorization":
        if n == 0:
            return self
        return MatrixFactorization(self.ring, self.f, [x + n for x in self.d], [x + n for x in self.e],
                                   self.phi.twist(n), self.psi.twist(n), check=False)

    def shift(self, i: int = 1) -> "MatrixFactorization":
        E = self
        for _ in range(abs(i)):
            E = E._shift_up() if i > 0 else E._shift_down()
        return E

    def _shift_up(self):
        h = self.h
        d1 = tuple(x + h for x in self.e)
        e1 = self.d
        phi1 = GradedMatrix(self.ring, d1, e1, (-self.psi).entries, 0, check=False)
        psi1 = GradedMatrix(self.ring, e1, d1, (-self.phi).entries, h, check=False)
        return MatrixFactorization(self.ring, self.f, d1, e1, phi1, psi1, check=False)

    def _shift_down(self):
        h = self.h
        d1 = self.e
        e1 = tuple(x - h for x in self.d)
        phi1 = GradedMatrix(self.ring, d1, e1, (-self.psi).entries, 0, check=False)
        psi1 = GradedMatrix(self.ring, e1, d1, (-self.phi).entries, h, check=False)
        return MatrixFactorization(self.ring, self.f, d1, e1, phi1, psi1, check=False)

    def translate(self, i: int = 0, n: int = 0) -> "MatrixFactorization":
        """``E[i](n)``."""
        return self.shift(i).twist(n)

    def identity(self) -> "MorphismPair":
        return MorphismPair(self, self, 0,
                            GradedMatrix.identity_on(self.ring, self.d),
                            GradedMatrix.identity_on(self.ring, self.e))

    def with_field(self, field) -> "MatrixFactorization":
        ring = self.ring.with_field(field)
        conv = lambda p: p.with_field(ring)  # noqa: E731
        return MatrixFactorization(ring, conv(self.f), self.d, self.e,
                                   self.phi.map_entries(conv, ring=ring),
                                   self.psi.map_entries(conv, ring=ring))


def mf_new(ring, f, d, e, phi, psi) -> MatrixFactorization:
    return MatrixFactorization(ring, f, d, e, phi, psi)


def zero_mf(ring: GradedRing, f: Poly) -> MatrixFactorization:
    return MatrixFactorization(ring, f, (), (), [], [])


def koszul_rank1(u: Poly, v: Poly) -> MatrixFactorization:
    """Rank-one factorization ``[u] . [v]`` of ``u*v`` with ``d = (0)``, ``e = (-deg u)``."""
    if u.is_zero or v.is_zero:
        raise FactorizationError("Koszul factors must be nonzero")
    for p in (u, v):
        if isinstance(p.degree, str):
            raise DegreeError(f"{p} is not homogeneous")
    ring = u.ring
    return MatrixFactorization(ring, u * v, (0,), (-u.degree,), [[u]], [[v]])


def translate(E: MatrixFactorization, i: int, n: int) -> MatrixFactorization:
    return E.translate(i, n)


def direct_sum(*mfs: MatrixFactorization) -> MatrixFactorization:
    first = mfs[0]
    for E in mfs[1:]:
        if E.f != first.f:
            raise FactorizationError(f"cannot add factorizations of {first.f} and {E.f}")
    ring, f = first.ring, first.f
    d = tuple(x for E in mfs for x in E.d)
    e = tuple(x for E in mfs for x in E.e)

    def diag(mats, target, source, offset):
        rows, c0 = [], 0
        width = len(source)
        for M in mats:
            w = len(M.source)
            for r in M.entries:
                rows.append([ring.zero()] * c0 + list(r) + [ring.zero()] * (width - c0 - w))
            c0 += w
        return GradedMatrix(ring, target, source, rows, offset, check=False)

    return MatrixFactorization(ring, f, d, e, diag([E.phi for E in mfs], d, e, 0),
                               diag([E.psi for E in mfs], e, d, first.h), check=False)


class MorphismPair:
    """``(alpha, beta): E -> T(n)`` with ``alpha: M0 -> M0'(n)`` and ``beta: M1 -> M1'(n)``.

    Both matrices are typed with offset 0 against the twisted target.
    Construction checks ``alpha phi = phi' beta`` and ``beta psi = psi' alpha``.
    """

    __slots__ = ("source", "target", "twist", "alpha", "beta")

    def __init__(self, source: MatrixFactorization, target: MatrixFactorization, twist: int,
                 alpha, beta, check: bool = True):
        ring = source.ring
        if target.ring != ring or target.f != source.f:
            raise RingError("morphism between factorizations of different polynomials")
        T = target.twist(twist)
        if not isinstance(alpha, GradedMatrix):
            alpha = GradedMatrix(ring, T.d, source.d, alpha)
        if not isinstance(beta, GradedMatrix):
            beta = GradedMatrix(ring, T.e, source.e, beta)
        if (alpha.target, alpha.source, alpha.offset) != (T.d, source.d, 0):
            raise ShapeError(f"alpha must map {source.d} -> {T.d}")
        if (beta.target, beta.source, beta.offset) != (T.e, source.e, 0):
            raise ShapeError(f"beta must map {source.e} -> {T.e}")
        self.source, self.target, self.twist = source, target, twist
        self.alpha, self.beta = alpha, beta
        if check:
            bad = self.defect()
            if bad:
                raise CocycleError(bad)

    def defect(self) -> str | None:
        """Description of the first failing cocycle condition, or None."""
        T = self.target.twist(self.twist)
        S = self.source
        if self.alpha @ S.phi != T.phi @ self.beta:
            return "alpha*phi != phi'*beta"
        if self.beta @ S.psi != T.psi @ self.alpha:
            return "beta*psi != psi'*alpha"
        return None

    def __add__(self, other: "MorphismPair") -> "MorphismPair":
        return MorphismPair(self.source, self.target, self.twist,
                            self.alpha + other.alpha, self.beta + other.beta, check=False)

    def __neg__(self):
        return MorphismPair(self.source, self.target, self.twist, -self.alpha, -self.beta, check=False)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "MorphismPair":
        return MorphismPair(self.source, self.target, self.twist,
                            self.alpha.scale(c), self.beta.scale(c), check=False)

    def __eq__(self, other):
        return (isinstance(other, MorphismPair) and self.source == other.source
                and self.target == other.target and self.twist == other.twist
                and self.alpha == other.alpha and self.beta == other.beta)

    def is_zero(self) -> bool:
        return self.alpha.is_zero() and self.beta.is_zero()

    def __repr__(self):
        return f"MorphismPair(alpha={self.alpha.to_lists()}, beta={self.beta.to_lists()}, twist={self.twist})"


def zero_morphism(source, target, twist=0) -> MorphismPair:
    T = target.twist(twist)
    return MorphismPair(source, target, twist,
                        GradedMatrix.zero(source.ring, T.d, source.d),
                        GradedMatrix.zero(source.ring, T.e, source.e), check=False)
