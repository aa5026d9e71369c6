"""Exponent matrices of invertible polynomials and the Berglund-Huebsch transpose.

An invertible polynomial has as many monomials as variables, each with
coefficient one, and a non-singular exponent matrix.  Whether the critical
point at the origin is isolated is *not* checked; only the matrix-level
conditions (non-zero determinant, positive weights) are enforced.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations

from .errors import ExponentMatrixError
from .poly import GradedRing, Poly
from .scalars import QQ, Matrix

_MAX_VARS = 8


@dataclass(frozen=True)
class ExponentMatrix:
    """Row ``i`` holds the exponents of the monomial attached to variable ``i``."""

    rows: tuple
    names: tuple
    field: object = QQ

    def __post_init__(self):
        n = len(self.names)
        if len(self.rows) != n or any(len(r) != n for r in self.rows):
            raise ExponentMatrixError(f"exponent matrix must be {n}x{n}")
        if any(x < 0 for r in self.rows for x in r):
            raise ExponentMatrixError("negative exponent")
        if Matrix(QQ, self.rows).rank() < n:
            raise ExponentMatrixError(f"exponent matrix {self.to_lists()} is singular")

    @property
    def size(self) -> int:
        return len(self.names)

    def to_lists(self) -> list:
        return [list(r) for r in self.rows]

    def transpose(self) -> "ExponentMatrix":
        return ExponentMatrix(tuple(zip(*self.rows)), self.names, self.field)

    def polynomial(self, ring: GradedRing | None = None) -> Poly:
        """``sum_i prod_j x_j^(a_ij)``, in ``ring`` or in the ring of its own weights."""
        if ring is None:
            weights, _ = weights_from_matrix(self)
            ring = GradedRing(self.names, weights, self.field)
        return Poly.from_terms(ring, [(r, 1) for r in self.rows])


def exponent_matrix(p: Poly) -> ExponentMatrix:
    """Exponent matrix of ``p`` with terms paired to variables.

    Term ``i`` is paired with the variable it is "about": among all
    bijections terms -> variables we take one maximising the sum of the
    paired exponents (ties go to the first in canonical term order).  For
    Fermat, chain and loop monomials this is the usual pairing.
    """
    ring = p.ring
    n = ring.ngens
    terms = p.sorted_terms()
    if len(terms) != n:
        raise ExponentMatrixError(f"{p} has {len(terms)} terms but the ring has {n} variables")
    if any(c != ring.field.one for _, c in terms):
        raise ExponentMatrixError(f"{p} has a coefficient different from 1")
    if n > _MAX_VARS:
        raise ExponentMatrixError(f"at most {_MAX_VARS} variables are supported")
    exps = [e for e, _ in terms]
    # best[j] = index of the term attached to variable j
    best = max(permutations(range(n)), key=lambda perm: sum(exps[t][j] for j, t in enumerate(perm)))
    rows = tuple(tuple(exps[t]) for t in best)
    return ExponentMatrix(rows, ring.names, ring.field)


def weights_from_matrix(A: ExponentMatrix) -> tuple[tuple, int]:
    """Primitive positive integer solution of ``A q = c (1, ..., 1)``; returns ``(q, c)``."""
    q = Matrix(QQ, A.rows).solve([1] * A.size)
    if q is None:
        raise ExponentMatrixError("exponent matrix is singular")
    den = math.lcm(*(int(x.denominator) for x in q))
    ints = [int(x * den) for x in q]
    g = math.gcd(*ints)
    weights = tuple(x // g for x in ints)
    if any(x <= 0 for x in weights):
        raise ExponentMatrixError(f"weights {weights} are not all positive")
    return weights, den // g


def bh_transpose(A) -> Poly:
    """Berglund-Huebsch transpose: the polynomial of ``A^T``.

    Accepts an :class:`ExponentMatrix` or a polynomial (whose exponent
    matrix is taken first).  The result lives in the ring whose weights make
    it homogeneous.
    """
    if isinstance(A, Poly):
        A = exponent_matrix(A)
    return A.transpose().polynomial()
