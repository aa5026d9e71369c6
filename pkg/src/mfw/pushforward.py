"""Push-forward of factorizations along a hyperplane section.

Given ``f`` over ``R`` and ``S = R[w]`` with ``deg w = a``, the section data
fixes ``F = f + w g`` with ``g`` divisible by ``w``.  A factorization
``(phi, psi)`` of ``f`` with twists ``(d, e)`` is sent to the rank-doubling
factorization of ``F``::

    phi~ = [[phi,    w],      psi~ = [[psi,  -w],
            [ -g,  psi]]              [  g,  phi]]

    M0~ = (d, e + h - a),  M1~ = (e, d - a)

Morphisms are lifted block-wise from a morphism ``E -> E'`` and a morphism
``E[1](-a) -> E'``, and split back by discarding ``w``-multiples in the four
distinguished blocks (the discarded part is a boundary).
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import CocycleError, RingError, SectionError
from .factorization import MatrixFactorization, MorphismPair
from .gmatrix import GradedMatrix
from .poly import GradedRing, Poly


@dataclass(frozen=True)
class SectionData:
    R: GradedRing
    S: GradedRing
    w: str
    a: int
    f: Poly
    g: Poly
    F: Poly

    @property
    def h(self) -> int:
        return self.f.degree

    @property
    def g_over_w(self) -> Poly:
        return self.g.divide_by_var(self.w) if self.g else self.g

    @property
    def r(self) -> int:
        """a-invariant of ``R``."""
        return self.R.a_invariant

    @property
    def dual_twist(self) -> int:
        """``r + h - a``; zero exactly in the Calabi-Yau case."""
        return self.r + self.h - self.a

    def w_poly(self) -> Poly:
        return self.S.gen(self.w)

    def with_field(self, field) -> "SectionData":
        R = self.R.with_field(field)
        return make_section(R, self.w, self.a, self.f.with_field(R),
                            self.g.with_field(R.extend(self.w, self.a)))


def make_section(R: GradedRing, wname: str, a: int, f, g) -> SectionData:
    """Validate ``F = f + w g`` over ``S = R[w]``; ``g`` may be text or a Poly over S."""
    S = R.extend(wname, a)
    if isinstance(f, str):
        f = S.parse(f)
    if f.ring == S:
        if wname in f.variables():
            raise SectionError(f"f = {f} mentions {wname}")
        f = f.restrict(R)
    if f.ring != R:
        raise RingError(f"f must live in {R}")
    if f.is_zero or isinstance(f.degree, str):
        raise SectionError(f"f = {f} must be nonzero and homogeneous")
    if isinstance(g, str):
        g = S.parse(g)
    elif g.ring == R:
        g = g.embed(S)
    if g.ring != S:
        raise RingError(f"g must live in {S}")
    if g.substitute_zero(wname) != g.ring.zero():
        raise SectionError(f"g not in wS: g = {g} has terms without {wname}")
    F = f.embed(S) + S.gen(wname) * g
    if g and F.degree != f.degree:
        raise SectionError(f"F = {F} is not homogeneous of degree {f.degree}")
    return SectionData(R, S, wname, a, f, g, F)


def _check_over_base(E: MatrixFactorization, sec: SectionData):
    if E.ring != sec.R or E.f != sec.f:
        raise RingError(f"factorization of {E.f} over {E.ring} does not match the section "
                        f"(f = {sec.f} over {sec.R})")


def push(E: MatrixFactorization, sec: SectionData) -> MatrixFactorization:
    """Push-forward of ``E`` to a factorization of ``F`` over ``S``."""
    _check_over_base(E, sec)
    S, h, a = sec.S, sec.h, sec.a
    d, e = E.d, E.e
    t0 = d + tuple(x + h - a for x in e)
    t1 = e + tuple(x - a for x in d)
    m = E.rank
    w, g = sec.w_poly(), sec.g
    Z = S.zero()
    phi = [[p.embed(S) for p in row] for row in E.phi.entries]
    psi = [[p.embed(S) for p in row] for row in E.psi.entries]

    def diag(p, j, i):
        return p if i == j else Z

    phit = ([phi[j] + [diag(w, j, i) for i in range(m)] for j in range(m)]
            + [[diag(-g, j, i) for i in range(m)] + psi[j] for j in range(m)])
    psit = ([psi[j] + [diag(-w, j, i) for i in range(m)] for j in range(m)]
            + [[diag(g, j, i) for i in range(m)] + phi[j] for j in range(m)])
    return MatrixFactorization(S, sec.F, t0, t1,
                               GradedMatrix(S, t0, t1, phit, 0),
                               GradedMatrix(S, t1, t0, psit, h))


def _entries_S(M: GradedMatrix, S) -> list:
    return [[p.embed(S) for p in row] for row in M.entries]


def _stack(tl, tr, bl, br) -> list:
    return [a + b for a, b in zip(tl, tr)] + [a + b for a, b in zip(bl, br)]


def _scaled(c: Poly, rows) -> list:
    return [[c * p for p in row] for row in rows]


def induce_morphism(m1: MorphismPair, m2: MorphismPair, sec: SectionData) -> MorphismPair:
    """Lift ``m1: E -> E'(n)`` and ``m2: E[1](-a) -> E'(n)`` to ``push E -> push E'(n)``.

    With ``(a2, b2) = (m2.alpha, -m2.beta)`` (the sign undoes the ``-phi, -psi``
    of ``E[1]``) the lift is ``alpha = [[a1, a2], [-(g/w) b2, b1]]`` and
    ``beta = [[b1, b2], [-(g/w) a2, a1]]``.
    """
    E, T, n = m1.source, m1.target, m1.twist
    _check_over_base(E, sec)
    _check_over_base(T, sec)
    if m2.target != T or m2.twist != n or m2.source != E.translate(1, -sec.a):
        raise RingError("m2 must be a morphism E[1](-a) -> E'(n) with the same twist as m1")
    for m in (m1, m2):
        bad = m.defect()
        if bad:
            raise CocycleError(f"input is not a cocycle: {bad}")
    S = sec.S
    gw = sec.g_over_w.embed(S) if sec.g else S.zero()
    a1, b1 = _entries_S(m1.alpha, S), _entries_S(m1.beta, S)
    a2 = _entries_S(m2.alpha, S)
    b2 = _scaled(S.constant(-1), _entries_S(m2.beta, S))
    alpha = _stack(a1, a2, _scaled(-gw, b2), b1)
    beta = _stack(b1, b2, _scaled(-gw, a2), a1)
    PE, PT = push(E, sec), push(T, sec)
    return MorphismPair(PE, PT, n, alpha, beta)


def split_morphism(c: MorphismPair, sec: SectionData) -> tuple[MorphismPair, MorphismPair]:
    """Inverse of :func:`induce_morphism` on homotopy classes.

    Subtracting the boundary with ``xi_3, xi_4, eta_3, eta_4`` equal to the
    ``w``-divisible parts (divided by ``w``) of ``alpha_1, alpha_2, beta_1,
    beta_2`` leaves those four blocks with entries in ``R``; the cocycle
    conditions then force them to be cocycles over ``R``.
    """
    bad = c.defect()
    if bad:
        raise CocycleError(f"not a cocycle: {bad}")
    E = _base_of(c.source, sec)
    T = _base_of(c.target, sec)
    n, m, mt = c.twist, E.rank, T.rank
    R = sec.R

    def block(M, rows, cols):
        return [[M.entries[j][i].substitute_zero(sec.w).restrict(R) for i in cols] for j in rows]

    a1 = block(c.alpha, range(mt), range(m))
    a2 = block(c.alpha, range(mt), range(m, 2 * m))
    b1 = block(c.beta, range(mt), range(m))
    b2 = block(c.beta, range(mt), range(m, 2 * m))
    m1 = MorphismPair(E, T, n, a1, b1)
    neg = R.constant(-1)
    m2 = MorphismPair(E.translate(1, -sec.a), T, n, a2, [[neg * p for p in row] for row in b2])
    return m1, m2


def _base_of(P: MatrixFactorization, sec: SectionData) -> MatrixFactorization:
    """Recover ``E`` from ``push(E)`` by reading the top-left blocks."""
    if P.ring != sec.S or P.f != sec.F:
        raise RingError("morphism does not live between push-forwards for this section")
    m = P.rank // 2
    R = sec.R
    phi = [[P.phi.entries[j][i].restrict(R) for i in range(m)] for j in range(m)]
    psi = [[P.psi.entries[j][i].restrict(R) for i in range(m)] for j in range(m)]
    E = MatrixFactorization(R, sec.f, P.d[:m], P.e[:m], phi, psi)
    if push(E, sec) != P:
        raise RingError("factorization is not a push-forward for this section")
    return E
