"""Module-theoretic cross-checks over quotient rings ``R/(f)``.

Everything here is plain graded linear algebra: the degree-``m`` piece of a
module presented by generators at twists ``g`` and relation columns is the
space ``(+)_j R_{m+g_j}`` modulo relation multiples and multiples of the
modulus ``f``.  No Groebner bases are involved.

The oracles are deliberately independent of :mod:`mfw.hom`: they compute
stable module Homs (maps modulo those factoring through the free cover),
Ext groups from the two-periodic resolution of a cokernel, and - for
quotients of positive dimension - Homs in the singularity category via
syzygies obtained by degree-wise kernel computations.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import MFWError, RingError
from .factorization import MatrixFactorization
from .gmatrix import GradedMatrix
from .poly import GradedRing, Poly
from .scalars import Echelon


@dataclass(frozen=True)
class QuotientRing:
    ambient: GradedRing
    modulus: Poly

    def __post_init__(self):
        if self.modulus.ring != self.ambient:
            raise RingError("modulus does not live in the ambient ring")
        if self.modulus.is_zero or isinstance(self.modulus.degree, str):
            raise RingError("modulus must be a nonzero homogeneous polynomial")

    @property
    def h(self) -> int:
        return self.modulus.degree

    @property
    def krull_dim(self) -> int:
        return self.ambient.ngens - 1

    def free(self, twists: Sequence[int]) -> "PresentedModule":
        twists = tuple(twists)
        return PresentedModule(self, twists, GradedMatrix.zero(self.ambient, twists, ()))


@dataclass(frozen=True)
class PresentedModule:
    """Cokernel of ``relations: (+) Q(s_k) -> (+) Q(g_j)`` over a quotient ``Q``."""

    quotient: QuotientRing
    gens: tuple
    relations: GradedMatrix

    def __post_init__(self):
        rel = self.relations
        if rel.target != tuple(self.gens) or rel.offset != 0:
            raise RingError("relation matrix must map into the generators with offset 0")
        if rel.ring != self.quotient.ambient:
            raise RingError("relations live in the wrong ring")

    @property
    def ring(self) -> GradedRing:
        return self.quotient.ambient

    def twist(self, n: int) -> "PresentedModule":
        return PresentedModule(self.quotient, tuple(g + n for g in self.gens), self.relations.twist(n))

    def free_cover(self) -> "PresentedModule":
        return self.quotient.free(self.gens)


class _Piece:
    """Degree-``m`` piece of a presented module with a fixed quotient basis."""

    def __init__(self, M: PresentedModule, m: int):
        ring, Q = M.ring, M.quotient
        self.index = {}
        self.cols = []
        for j, g in enumerate(M.gens):
            for mono in ring.monomials_of_degree(m + g):
                self.index[(j, mono)] = len(self.cols)
                self.cols.append((j, mono))
        sub = Echelon(ring.field)
        rel = M.relations
        for k, s in enumerate(rel.source):
            for mu in ring.monomials_of_degree(m + s):
                sub.add(_column_times(self.index, rel.entries, k, mu, ring.field))
        fterms = Q.modulus.terms
        for j, g in enumerate(M.gens):
            for mu in ring.monomials_of_degree(m + g - Q.h):
                v = {}
                for nu, c in fterms.items():
                    v[self.index[(j, _plus(mu, nu))]] = c
                sub.add(v)
        self.sub = sub
        self.basis = [c for c in range(len(self.cols)) if c not in sub.pivots]
        self.qindex = {c: q for q, c in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def project(self, vec: dict) -> dict:
        r = self.sub.reduce(vec)
        return {self.qindex[c]: v for c, v in r.items()}

    def lift(self, q: int):
        """``(generator index, monomial)`` of the q-th quotient basis vector."""
        return self.cols[self.basis[q]]


def _plus(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _column_times(index, entries, k, mu, field) -> dict:
    v = {}
    p = field.characteristic
    for j, row in enumerate(entries):
        for nu, c in row[k].terms.items():
            key = index[(j, _plus(mu, nu))]
            x = v.get(key, 0) + c
            if p:
                x %= p
            if x:
                v[key] = x
            else:
                v.pop(key, None)
    return v


@lru_cache(maxsize=4096)
def _piece(M: PresentedModule, m: int) -> _Piece:
    return _Piece(M, m)


def coker_presentation(E: MatrixFactorization) -> PresentedModule:
    """The module ``coker(phi)`` over ``R/(f)``: generators at ``d``, relations ``phi``."""
    return PresentedModule(QuotientRing(E.ring, E.f), E.d, E.phi)


def hilbert_function(M: PresentedModule, window) -> list[int]:
    """``[dim M_m for m in lo..hi]`` (inclusive window)."""
    lo, hi = window
    return [_piece(M, m).dim for m in range(lo, hi + 1)]


# -- Hom complexes ---------------------------------------------------------

class _HomSpace:
    """Coordinates of ``Hom((+) Q(t_l), N(n))_0 = (+)_l N_{n - t_l}``."""

    def __init__(self, N: PresentedModule, n: int, twists: Sequence[int]):
        self.pieces = [_piece(N, n - t) for t in twists]
        self.offsets = []
        total = 0
        for P in self.pieces:
            self.offsets.append(total)
            total += P.dim
        self.dim = total


def _precompose(N, n, src: _HomSpace, tgt: _HomSpace, entries, field) -> list[dict]:
    """Images of the basis of ``src`` under ``y -> y o D``.

    ``entries[l][k]`` maps generator ``k`` of the new free module into
    generator ``l`` of the old one; ``src`` is Hom from the old module.
    """
    images = []
    p = field.characteristic
    for l, Pl in enumerate(src.pieces):
        for q in range(Pl.dim):
            j, mono = Pl.lift(q)
            out = {}
            for k, Pk in enumerate(tgt.pieces):
                poly = entries[l][k]
                if poly.is_zero:
                    continue
                amb = {}
                for nu, c in poly.terms.items():
                    amb[Pk.index[(j, _plus(mono, nu))]] = c
                for qq, v in Pk.project(amb).items():
                    key = tgt.offsets[k] + qq
                    x = out.get(key, 0) + v
                    if p:
                        x %= p
                    if x:
                        out[key] = x
                    else:
                        out.pop(key, None)
            images.append(out)
    return images


def _transpose(images: list[dict]) -> list[dict]:
    rows: dict = {}
    for col, img in enumerate(images):
        for r, v in img.items():
            rows.setdefault(r, {})[col] = v
    return [rows[r] for r in sorted(rows)]


def _rank(images, field) -> int:
    ech = Echelon(field)
    for v in images:
        ech.add(v)
    return ech.rank


def _module_hom(M: PresentedModule, N: PresentedModule, n: int):
    """Basis (coordinate dicts) of ``Hom(M, N(n))_0`` and its coordinate space."""
    field = M.ring.field
    C0 = _HomSpace(N, n, M.gens)
    C1 = _HomSpace(N, n, M.relations.source)
    images = _precompose(N, n, C0, C1, M.relations.entries, field)
    ech = Echelon(field)
    for row in _transpose(images):
        ech.add(row)
    return ech.kernel(C0.dim), C0


def module_hom_dim(M: PresentedModule, N: PresentedModule, n: int = 0) -> int:
    """``dim Hom_Q(M, N(n))_0`` (all module maps, not stable)."""
    _check_same(M, N)
    return len(_module_hom(M, N, n)[0])


def _check_same(M, N):
    if M.quotient != N.quotient:
        raise RingError("modules over different quotient rings")


def stable_hom_dim(M: PresentedModule, N: PresentedModule, n: int = 0) -> int:
    """Degree-0 maps ``M -> N(n)`` modulo those factoring through a projective.

    A map factors through a projective iff it lifts along the free cover
    ``P -> N``, so the subtracted part is the image of ``Hom(M, P(n))``.
    """
    _check_same(M, N)
    field = M.ring.field
    homs, C0 = _module_hom(M, N, n)
    P = N.free_cover()
    phoms, PC0 = _module_hom(M, P, n)
    # P and N share generators, so a quotient basis element of P lifts to the
    # same (generator, monomial) pair, which we re-project into N
    images = []
    for v in phoms:
        out = {}
        for col, c in v.items():
            blk = max(b for b, off in enumerate(PC0.offsets) if off <= col)
            Pp, Np = PC0.pieces[blk], C0.pieces[blk]
            j, mono = Pp.lift(col - PC0.offsets[blk])
            for qq, x in Np.project({Np.index[(j, mono)]: c}).items():
                key = C0.offsets[blk] + qq
                y = field.reduce(out.get(key, 0) + x)
                if y:
                    out[key] = y
                else:
                    out.pop(key, None)
        images.append(out)
    return len(homs) - _rank(images, field)


# -- resolutions -------------------------------------------------------------

def _periodic_resolution(E: MatrixFactorization, length: int):
    """Twists and differentials of the two-periodic resolution of ``coker phi``.

    ``P_{2k} = (+) Q(d - k h)``, ``P_{2k+1} = (+) Q(e - k h)``; odd
    differentials are ``phi`` and even ones ``psi``.
    """
    h = E.h
    twists = []
    for j in range(length + 1):
        base = E.d if j % 2 == 0 else E.e
        twists.append(tuple(t - (j // 2) * h for t in base))
    diffs = [None] + [(E.phi if j % 2 else E.psi).entries for j in range(1, length + 1)]
    return twists, diffs


def _ext_from_resolution(twists, diffs, N: PresentedModule, n: int, i: int) -> int:
    field = N.ring.field
    spaces = [_HomSpace(N, n, t) for t in twists[: i + 2]]

    def rank_of(j):  # delta_j: C^{j-1} -> C^j
        if j <= 0:
            return 0
        return _rank(_precompose(N, n, spaces[j - 1], spaces[j], diffs[j], field), field)

    return spaces[i].dim - rank_of(i + 1) - rank_of(i)


def ext_dim_periodic(E: MatrixFactorization, T: MatrixFactorization, i: int, n: int = 0) -> int:
    """``dim Ext^i_{R/(f)}(coker phi, coker phi'(n))_0`` for ``i >= 1``."""
    if i < 1:
        raise MFWError("ext_dim_periodic needs i >= 1")
    if E.ring != T.ring or E.f != T.f:
        raise RingError("factorizations over different rings or polynomials")
    twists, diffs = _periodic_resolution(E, i + 1)
    return _ext_from_resolution(twists, diffs, coker_presentation(T), n, i)


def kernel_generators(Q: QuotientRing, target: Sequence[int], source: Sequence[int],
                      entries, max_degree: int | None = None) -> GradedMatrix:
    """Generators of ``ker((+) Q(source) -> (+) Q(target))`` as matrix columns.

    Generators are found degree by degree: in each degree the kernel is
    compared with what lower generators already span.  The default degree
    bound is the top generator degree of the source plus ``deg f`` plus the
    largest weight, which covers the syzygies of hypersurface modules.
    """
    ring = Q.ambient
    field = ring.field
    source, target = tuple(source), tuple(target)
    src_mod = Q.free(source)
    tgt_mod = Q.free(target)
    if not source:
        return GradedMatrix.zero(ring, source, ())
    lo = min(-s for s in source)
    if max_degree is None:
        max_degree = max(-s for s in source) + Q.h + max(ring.weights)
    gens: list = []  # (degree, {(k, mono): coeff})
    cols: list = []
    for m in range(lo, max_degree + 1):
        sp, tp = _piece(src_mod, m), _piece(tgt_mod, m)
        if sp.dim == 0:
            continue
        # matrix of the map in quotient coordinates, one row per target coordinate
        images = []
        for q in range(sp.dim):
            k, mono = sp.lift(q)
            amb = {}
            for j in range(len(target)):
                for nu, c in entries[j][k].terms.items():
                    key = tp.index[(j, _plus(mono, nu))]
                    amb[key] = field.reduce(amb.get(key, 0) + c)
            images.append(tp.project({a: b for a, b in amb.items() if b}))
        ech = Echelon(field)
        for row in _transpose(images):
            ech.add(row)
        kernel = ech.kernel(sp.dim)
        spanned = Echelon(field)
        for deg, col in gens:
            for mu in ring.monomials_of_degree(m - deg):
                amb = {}
                for (k, mono), c in col.items():
                    key = sp.index[(k, _plus(mono, mu))]
                    amb[key] = field.reduce(amb.get(key, 0) + c)
                spanned.add(sp.project({a: b for a, b in amb.items() if b}))
        for v in kernel:
            if spanned.add(v):
                col = {sp.lift(q): c for q, c in v.items()}
                gens.append((m, col))
                cols.append(-m)
    rows = []
    for j, s in enumerate(source):
        row = []
        for deg, col in gens:
            row.append(Poly(ring, {mono: c for (k, mono), c in col.items() if k == j}))
        rows.append(row)
    return GradedMatrix(ring, source, tuple(cols), rows, 0)


def syzygy(M: PresentedModule, j: int, max_degree: int | None = None) -> PresentedModule:
    """Presentation of the ``j``-th syzygy module of ``M`` (``j = 0`` gives ``M``)."""
    Q = M.quotient
    cur = M
    for _ in range(j):
        rel = cur.relations
        nxt = kernel_generators(Q, rel.target, rel.source, rel.entries, max_degree)
        cur = PresentedModule(Q, rel.source, nxt)
    return cur


def singular_hom_dim(M: PresentedModule, N: PresentedModule, n: int = 0,
                     depth: int | None = None) -> int:
    """Hom in the graded singularity category, as a stable Hom of syzygies.

    Syzygies of order ``krull_dim`` are maximal Cohen-Macaulay, and on those
    the stable Hom computes the singularity category.  For zero-dimensional
    quotients this is just :func:`stable_hom_dim`.
    """
    _check_same(M, N)
    k = M.quotient.krull_dim if depth is None else depth
    return stable_hom_dim(syzygy(M, k), syzygy(N, k), n)


def pushforward_module(E: MatrixFactorization, sec) -> PresentedModule:
    """``coker(phi)`` regarded over ``S/(F)``: relations ``(phi | w id)``."""
    S = sec.S
    m = E.rank
    rows = [[p.embed(S) for p in E.phi.entries[j]]
            + [S.gen(sec.w) if i == j else S.zero() for i in range(m)] for j in range(m)]
    src = E.e + tuple(x - sec.a for x in E.d)
    rel = GradedMatrix(S, E.d, src, rows, 0)
    return PresentedModule(QuotientRing(S, sec.F), E.d, rel)
