"""Morphism spaces in the homotopy category of graded matrix factorizations.

``Hom(E, T(n))`` is computed as cycles modulo boundaries in finite
dimensional linear algebra:

* unknowns are the monomial coefficients of ``alpha: M0 -> M0'(n)`` and
  ``beta: M1 -> M1'(n)`` (entry degrees ``d'_j + n - d_i`` and
  ``e'_j + n - e_i``);
* cycles satisfy ``alpha phi = phi' beta`` and ``beta psi = psi' alpha``;
* boundaries are ``(phi' xi + eta psi, psi' eta + xi phi)`` with
  ``xi: M0 -> M1'(n)`` of offset 0 and ``eta: M1 -> M0'(n)`` of offset ``-h``.

The ``-h`` on ``eta`` is what makes the homotopy relation homogeneous; typed
without it the two sides of the relation would differ in degree by ``h``.

Unknown order is alpha entries row-major, then beta, each entry's monomials
in graded-lex order; homotopy parameters follow the same pattern for xi then
eta.  Bases are read off reduced echelon forms, so they are reproducible.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import CapExceeded, RingError
from .factorization import MatrixFactorization, MorphismPair
from .gmatrix import GradedMatrix
from .poly import Poly
from .scalars import Echelon

DEFAULT_CAP = 20000


class _Layout:
    """Column numbering for the coefficients of a list of graded matrices."""

    def __init__(self, ring, blocks):
        self.ring = ring
        self.blocks = blocks  # name -> (target, source, offset)
        self.index = {}
        self.cols = []
        for name, (target, source, offset) in blocks.items():
            for j, t in enumerate(target):
                for i, s in enumerate(source):
                    for mono in ring.monomials_of_degree(t - s + offset):
                        self.index[(name, j, i, mono)] = len(self.cols)
                        self.cols.append((name, j, i, mono))

    def __len__(self):
        return len(self.cols)

    def matrix(self, name, vec: dict) -> GradedMatrix:
        target, source, offset = self.blocks[name]
        ring = self.ring
        acc = [[{} for _ in source] for _ in target]
        for col, c in vec.items():
            bname, j, i, mono = self.cols[col]
            if bname == name:
                acc[j][i][mono] = c
        rows = [[Poly(ring, dict(t)) for t in row] for row in acc]
        return GradedMatrix(ring, target, source, rows, offset, check=False)

    def vector(self, name, M: GradedMatrix, into: dict | None = None) -> dict:
        out = {} if into is None else into
        for j, row in enumerate(M.entries):
            for i, p in enumerate(row):
                for mono, c in p.terms.items():
                    out[self.index[(name, j, i, mono)]] = c
        return out


@dataclass
class HomResult:
    """``Hom(source, target(twist)[shift])`` with witnesses.

    ``cycle_basis`` and ``boundary_basis`` are sparse coefficient vectors
    (dicts column -> value) in the alpha/beta unknown layout.
    """

    source: MatrixFactorization
    target: MatrixFactorization
    twist: int
    shift: int
    cycle_dim: int
    boundary_dim: int
    cycle_basis: list = field(repr=False)
    boundary_basis: list = field(repr=False)
    _core: object = field(repr=False, default=None)

    @property
    def dim(self) -> int:
        return self.cycle_dim - self.boundary_dim

    @property
    def effective_target(self) -> MatrixFactorization:
        """``target[shift](twist)``; witnesses are morphisms into this at twist 0."""
        return self._core.target

    def morphism(self, vec: dict) -> MorphismPair:
        core = self._core
        return MorphismPair(self.source, core.target, 0,
                            core.layout.matrix("alpha", vec), core.layout.matrix("beta", vec),
                            check=False)

    def vector(self, m: MorphismPair) -> dict:
        lay = self._core.layout
        v = lay.vector("alpha", m.alpha)
        return lay.vector("beta", m.beta, into=v)

    def cycles(self) -> list[MorphismPair]:
        return [self.morphism(v) for v in self.cycle_basis]

    def class_basis(self) -> list[MorphismPair]:
        """Cycles whose classes form a basis of the Hom space."""
        ech = Echelon(self._core.field)
        for b in self.boundary_basis:
            ech.add(b)
        return [self.morphism(v) for v in self.cycle_basis if ech.add(v)]

    def is_cycle(self, m: MorphismPair) -> bool:
        return self._core.is_cycle(self.vector(m))

    def is_boundary(self, m: MorphismPair) -> bool:
        return self._core.boundaries.contains(self.vector(m))

    def homologous(self, m1: MorphismPair, m2: MorphismPair) -> bool:
        return self.is_boundary(m1 - m2)

    def class_coordinates(self, m: MorphismPair) -> tuple:
        """Coordinates of the class of ``m`` against :meth:`class_basis`."""
        f = self._core.field
        reps = [self.vector(c) for c in self.class_basis()]
        # tag each representative with its own extra column; the remainder of m
        # then lives purely on the tags and records minus its coordinates
        base = len(self._core.layout)
        aug = Echelon(f)
        for b in self.boundary_basis:
            aug.add(dict(b))
        for k, r in enumerate(reps):
            rr = dict(r)
            rr[base + k] = f.one
            aug.add(rr)
        rem = aug.reduce(self.vector(m))
        if any(c < base for c in rem):
            raise ValueError("not a cycle in this Hom space")
        return tuple(f.neg(rem.get(base + k, f.zero)) for k in range(len(reps)))


class _Core:
    """Linear-algebra data for ``Hom(E, T)`` at twist 0."""

    def __init__(self, E: MatrixFactorization, T: MatrixFactorization, cap: int):
        if E.ring != T.ring:
            raise RingError(f"factorizations over different rings: {E.ring} vs {T.ring}")
        if E.f != T.f:
            raise RingError(f"factorizations of different polynomials: {E.f} vs {T.f}")
        ring = E.ring
        self.field = F = ring.field
        self.source, self.target = E, T
        h = E.h
        lay = _Layout(ring, {"alpha": (T.d, E.d, 0), "beta": (T.e, E.e, 0)})
        hlay = _Layout(ring, {"xi": (T.e, E.d, 0), "eta": (T.d, E.e, -h)})
        if len(lay) + len(hlay) > cap:
            raise CapExceeded(
                f"Hom computation needs {len(lay)} + {len(hlay)} unknowns, above cap {cap}")
        self.layout, self.homotopy_layout = lay, hlay
        p = F.characteristic
        idx = lay.index
        rows: dict = {}

        def bump(key, col, c):
            row = rows.setdefault(key, {})
            v = row.get(col, 0) + c
            if p:
                v %= p
            if v:
                row[col] = v
            else:
                row.pop(col, None)

        def plus(m, n):
            return tuple(a + b for a, b in zip(m, n))

        phi, psi, phi_t, psi_t = E.phi.entries, E.psi.entries, T.phi.entries, T.psi.entries
        rT, rE = len(T.d), len(E.d)
        for col, (name, j, i, mu) in enumerate(lay.cols):
            if name == "alpha":
                # (alpha phi)_{jk} and -(psi' alpha)_{li}
                for k in range(rE):
                    for nu, c in phi[i][k].terms.items():
                        bump(("A", j, k, plus(mu, nu)), col, c)
                for l in range(rT):
                    for nu, c in psi_t[l][j].terms.items():
                        bump(("B", l, i, plus(nu, mu)), col, -c)
            else:
                # beta = (l=j, k=i): -(phi' beta)_{j' k} and (beta psi)_{l k'}
                for jj in range(rT):
                    for nu, c in phi_t[jj][j].terms.items():
                        bump(("A", jj, i, plus(nu, mu)), col, -c)
                for k in range(rE):
                    for nu, c in psi[i][k].terms.items():
                        bump(("B", j, k, plus(mu, nu)), col, c)
        self.constraints = [r for _, r in sorted(rows.items(), key=lambda kv: kv[0]) if r]
        cyc = Echelon(F)
        for r in self.constraints:
            cyc.add(r)
        self.cycle_echelon = cyc
        self.cycle_basis = cyc.kernel(len(lay))

        def image(name, j, i, mu):
            out: dict = {}

            def put(key, c):
                col = idx[key]
                v = out.get(col, 0) + c
                if p:
                    v %= p
                if v:
                    out[col] = v
                else:
                    out.pop(col, None)

            if name == "xi":
                # xi_{j i}: M0_i -> M1'_j ; phi' xi lands in alpha, xi phi in beta
                for jj in range(rT):
                    for nu, c in phi_t[jj][j].terms.items():
                        put(("alpha", jj, i, plus(nu, mu)), c)
                for k in range(rE):
                    for nu, c in phi[i][k].terms.items():
                        put(("beta", j, k, plus(mu, nu)), c)
            else:
                # eta_{j i}: M1_i -> M0'_j ; eta psi lands in alpha, psi' eta in beta
                for k in range(rE):
                    for nu, c in psi[i][k].terms.items():
                        put(("alpha", j, k, plus(mu, nu)), c)
                for l in range(rT):
                    for nu, c in psi_t[l][j].terms.items():
                        put(("beta", l, i, plus(nu, mu)), c)
            return out

        bnd = Echelon(F)
        for key in hlay.cols:
            bnd.add(image(*key))
        self.boundaries = bnd
        for b in bnd.pivots.values():
            if not self.is_cycle(b):
                raise AssertionError("boundary is not a cycle: d^2 != 0")

    def is_cycle(self, vec: dict) -> bool:
        p = self.field.characteristic
        for row in self.constraints:
            s = 0
            if len(row) < len(vec):
                for c, v in row.items():
                    x = vec.get(c)
                    if x is not None:
                        s += v * x
            else:
                for c, x in vec.items():
                    v = row.get(c)
                    if v is not None:
                        s += v * x
            if (s % p if p else s):
                return False
        return True


@lru_cache(maxsize=4096)
def _core(E: MatrixFactorization, T: MatrixFactorization, cap: int) -> _Core:
    return _Core(E, T, cap)


def hom_shifted(E: MatrixFactorization, T: MatrixFactorization, n: int = 0, i: int = 0,
                cap: int = DEFAULT_CAP) -> HomResult:
    """``Hom(E, T(n)[i])``."""
    core = _core(E, T.translate(i, n), cap)
    return HomResult(E, T, n, i, len(core.cycle_basis), core.boundaries.rank,
                     core.cycle_basis, core.boundaries.basis(), core)


def hom_space(E: MatrixFactorization, T: MatrixFactorization, n: int = 0,
              cap: int = DEFAULT_CAP) -> HomResult:
    """``Hom(E, T(n))`` in the homotopy category."""
    return hom_shifted(E, T, n, 0, cap)


def hom_dim(E, T, n=0, i=0, cap=DEFAULT_CAP) -> int:
    core = _core(E, T.translate(i, n), cap)
    return len(core.cycle_basis) - core.boundaries.rank


def _cell(args):
    E, T, n, i, cap = args
    return hom_dim(E, T, n, i, cap)


def map_cells(cells, jobs: int = 1) -> list[int]:
    """Evaluate ``hom_dim`` over ``(E, T, n, i, cap)`` tuples, in input order."""
    cells = list(cells)
    if jobs <= 1 or len(cells) < 2:
        return [_cell(c) for c in cells]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_cell, cells, chunksize=max(1, len(cells) // (4 * jobs))))


def hom_table(E, T, twists, shifts, cap=DEFAULT_CAP, jobs: int = 1) -> dict:
    """``{(i, n): dim Hom(E, T(n)[i])}`` over the given (inclusive) ranges."""
    keys = [(i, n) for i in shifts for n in twists]
    dims = map_cells([(E, T, n, i, cap) for i, n in keys], jobs)
    return dict(zip(keys, dims))
