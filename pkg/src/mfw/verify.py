"""Dimension-level harnesses for the push-forward Hom decomposition.

For a section ``F = f + w g`` and factorizations ``E, T`` of ``f``::

    dim Hom(push E, push T(n)[i]) == dim Hom(E, T(n)[i])
                                     + dim Hom(T(n), E(s)[delta - i])

with ``s = sigma * (r + h - a)``.  The duality exponent ``delta`` and the
sign ``sigma`` form a :class:`DualityConvention`; ``"auto"`` mode tries the
candidates in a fixed order and reports the first that passes everywhere.
Serre duality ``Hom(E, T(n)) ~ Hom(T(n), E(r + h)[delta - 1])^*`` is checked
the same way.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import MFWError, RingError
from .factorization import MatrixFactorization
from .hom import DEFAULT_CAP, hom_space, map_cells
from .pushforward import SectionData, induce_morphism, push, split_morphism


@dataclass(frozen=True)
class DualityConvention:
    delta: int
    sigma: int = 1
    base: str = ""  # "dim R" or "dim Rbar", for reporting

    def __post_init__(self):
        if self.sigma not in (1, -1):
            raise ValueError("sigma must be +1 or -1")

    def describe(self) -> str:
        tag = f"{self.base} = {self.delta}" if self.base else str(self.delta)
        return f"delta = {tag}, sigma = {'+1' if self.sigma > 0 else '-1'}"

    def to_json(self) -> dict:
        return {"delta": self.delta, "sigma": self.sigma, "base": self.base}


def candidate_conventions(ring) -> list[DualityConvention]:
    """Order tried by ``"auto"``: both exponents with ``sigma = +1``, then ``-1``."""
    dR = ring.ngens
    return [DualityConvention(dR, s, "dim R") if k == 0 else DualityConvention(dR - 1, s, "dim Rbar")
            for s in (1, -1) for k in (0, 1)]


def _check_convention(conv: DualityConvention, ring):
    if conv.delta not in (ring.ngens, ring.ngens - 1):
        raise MFWError(f"delta = {conv.delta} is neither dim R = {ring.ngens} nor dim Rbar")


@dataclass(frozen=True)
class Row:
    i: int
    n: int
    lhs: int
    summands: tuple
    dual_twist: int  # internal twist carried by the second summand
    passed: bool

    def to_json(self) -> dict:
        return {"i": self.i, "n": self.n, "lhs": self.lhs, "summands": list(self.summands),
                "dual_twist": self.dual_twist, "pass": self.passed}


@dataclass
class VerifyReport:
    kind: str
    rows: list
    convention: DualityConvention | None
    tried: list = field(default_factory=list)  # (convention, passed)

    @property
    def passed(self) -> bool:
        return self.convention is not None and all(r.passed for r in self.rows)

    @property
    def counterexamples(self) -> list:
        return [r for r in self.rows if not r.passed]

    def row(self, i: int, n: int) -> Row:
        for r in self.rows:
            if (r.i, r.n) == (i, n):
                return r
        raise KeyError((i, n))

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "pass": self.passed,
            "convention": self.convention.to_json() if self.convention else None,
            "tried": [{"convention": c.to_json(), "pass": ok} for c, ok in self.tried],
            "rows": [r.to_json() for r in self.rows],
        }


def _dims(cells, cap, jobs) -> list[int]:
    return map_cells([(E, T, n, i, cap) for E, T, n, i in cells], jobs)


def _pick(conv, ring, evaluate):
    """Run ``evaluate(conv) -> rows`` for a fixed convention or the auto sequence."""
    if conv != "auto":
        _check_convention(conv, ring)
        rows = evaluate(conv)
        ok = all(r.passed for r in rows)
        return rows, conv, [(conv, ok)]
    tried, first = [], None
    for c in candidate_conventions(ring):
        rows = evaluate(c)
        ok = all(r.passed for r in rows)
        tried.append((c, ok))
        if first is None:
            first = rows
        if ok:
            return rows, c, tried
    return first, None, tried


def _check_section(E: MatrixFactorization, sec: SectionData):
    if E.ring != sec.R or E.f != sec.f:
        raise RingError(f"factorization of {E.f} over {E.ring} does not match the section "
                        f"(f = {sec.f} over {sec.R})")


def verify_theorem(E: MatrixFactorization, T: MatrixFactorization, sec: SectionData,
                   shifts: Iterable[int] = range(-3, 4), twists: Iterable[int] | None = None,
                   conv="auto", cap: int = DEFAULT_CAP, jobs: int = 1) -> VerifyReport:
    """Compare ``Hom(push E, push T(n)[i])`` with the two-summand prediction."""
    _check_section(E, sec)
    _check_section(T, sec)
    shifts = list(shifts)
    if twists is None:
        twists = range(-(sec.h + 2), sec.h + 3)
    grid = [(i, n) for i in shifts for n in twists]
    PE, PT = push(E, sec), push(T, sec)
    base = _dims([(PE, PT, n, i) for i, n in grid] + [(E, T, n, i) for i, n in grid], cap, jobs)
    lhs, first = base[: len(grid)], base[len(grid):]

    def evaluate(c: DualityConvention):
        s = c.sigma * sec.dual_twist
        second = _dims([(T.twist(n), E, s, c.delta - i) for i, n in grid], cap, jobs)
        return [Row(i, n, l, (a, b), s, l == a + b)
                for (i, n), l, a, b in zip(grid, lhs, first, second)]

    rows, chosen, tried = _pick(conv, sec.R, evaluate)
    return VerifyReport("verify-theorem", rows, chosen, tried)


def verify_serre(E: MatrixFactorization, T: MatrixFactorization, twists: Iterable[int] = range(-4, 5),
                 conv="auto", cap: int = DEFAULT_CAP, jobs: int = 1) -> VerifyReport:
    """Check ``dim Hom(E, T(n)) == dim Hom(T(n), E(r + h)[delta - 1])`` for each ``n``."""
    if E.ring != T.ring or E.f != T.f:
        raise RingError("factorizations over different rings or polynomials")
    twists = list(twists)
    ring = E.ring
    rh = ring.a_invariant + E.h
    lhs = _dims([(E, T, n, 0) for n in twists], cap, jobs)

    def evaluate(c: DualityConvention):
        s = c.sigma * rh
        rhs = _dims([(T.twist(n), E, s, c.delta - 1) for n in twists], cap, jobs)
        return [Row(0, n, l, (b,), s, l == b) for n, l, b in zip(twists, lhs, rhs)]

    rows, chosen, tried = _pick(conv, ring, evaluate)
    return VerifyReport("verify-serre", rows, chosen, tried)


@dataclass
class FamilyReport:
    """One convention checked across every ordered pair of a family."""

    convention: DualityConvention | None
    reports: dict  # (s, t) -> VerifyReport, 1-based object indices
    tried: list

    @property
    def passed(self) -> bool:
        return self.convention is not None and all(r.passed for r in self.reports.values())

    def to_json(self) -> dict:
        return {
            "pass": self.passed,
            "convention": self.convention.to_json() if self.convention else None,
            "tried": [{"convention": c.to_json(), "pass": ok} for c, ok in self.tried],
            "pairs": [{"source": s, "target": t, "report": r.to_json()}
                      for (s, t), r in sorted(self.reports.items())],
        }


def verify_family(objects: Sequence[MatrixFactorization], sec: SectionData, kind: str = "theorem",
                  shifts=range(-3, 4), twists=None, conv="auto", cap: int = DEFAULT_CAP,
                  jobs: int = 1) -> FamilyReport:
    """Find one convention under which every ordered pair passes.

    ``kind`` is ``"theorem"`` or ``"serre"``.  With ``conv="auto"`` the
    candidates are tried in the fixed order of :func:`candidate_conventions`
    and the first that passes on all pairs is reported; if none does, the
    reports of the first candidate are returned with ``convention=None``.
    """
    pairs = [(s, t) for s in range(len(objects)) for t in range(len(objects))]

    def run(c):
        out = {}
        for s, t in pairs:
            E, T = objects[s], objects[t]
            if kind == "theorem":
                rep = verify_theorem(E, T, sec, shifts, twists, c, cap, jobs)
            elif kind == "serre":
                rep = verify_serre(E, T, range(-(sec.h + 2), sec.h + 3) if twists is None else twists,
                                   c, cap, jobs)
            else:
                raise ValueError(f"unknown family check {kind!r}")
            out[(s + 1, t + 1)] = rep
        return out

    if conv != "auto":
        reps = run(conv)
        ok = all(r.passed for r in reps.values())
        return FamilyReport(conv, reps, [(conv, ok)])
    tried, first = [], None
    for c in candidate_conventions(sec.R):
        reps = run(c)
        ok = all(r.passed for r in reps.values())
        tried.append((c, ok))
        first = first or reps
        if ok:
            return FamilyReport(c, reps, tried)
    return FamilyReport(None, first, tried)


def roundtrip_check(E: MatrixFactorization, T: MatrixFactorization, sec: SectionData,
                    n: int = 0, cap: int = DEFAULT_CAP) -> dict:
    """Check ``split o induce`` and ``induce o split`` on class bases.

    Returns counts of checked classes and a list of failures (empty on success).
    """
    H1 = hom_space(E, T, n, cap)
    H2 = hom_space(E.translate(1, -sec.a), T, n, cap)
    HP = hom_space(push(E, sec), push(T, sec), n, cap)
    failures = []
    zero1 = [H1.morphism({})]
    zero2 = [H2.morphism({})]
    inputs = [(m, zero2[0]) for m in H1.class_basis()] + [(zero1[0], m) for m in H2.class_basis()]
    for k, (m1, m2) in enumerate(inputs):
        c = induce_morphism(m1, m2, sec)  # validated on construction
        s1, s2 = split_morphism(c, sec)
        if (H1.class_coordinates(s1) != H1.class_coordinates(m1)
                or H2.class_coordinates(s2) != H2.class_coordinates(m2)):
            failures.append(f"split(induce(basis {k})) changed the class")
    for k, c in enumerate(HP.class_basis()):
        s1, s2 = split_morphism(c, sec)
        back = induce_morphism(s1, s2, sec)
        if not HP.homologous(back, c):
            failures.append(f"induce(split(class {k})) is not homologous to the input")
    return {"induced": len(inputs), "split": HP.dim, "failures": failures}


@dataclass
class DirectednessReport:
    hom: list
    push_hom: list
    dual: list
    convention: DualityConvention

    @property
    def flags(self) -> list:
        """``push_hom == hom + dual`` per cell."""
        return [[p == a + b for p, a, b in zip(*rows)] for rows in zip(self.push_hom, self.hom, self.dual)]

    def to_json(self) -> dict:
        return {"hom": self.hom, "push_hom": self.push_hom, "dual": self.dual,
                "split": self.flags, "convention": self.convention.to_json()}


def directedness_report(objects: Sequence[MatrixFactorization], sec: SectionData,
                        conv: DualityConvention | None = None, cap: int = DEFAULT_CAP,
                        jobs: int = 1) -> DirectednessReport:
    """Degree-zero Hom tables before and after push-forward, with the dual backward part."""
    for E in objects:
        _check_section(E, sec)
    if conv is None:
        conv = DualityConvention(sec.R.ngens - 1, 1, "dim Rbar")
    k = len(objects)
    pushed = [push(E, sec) for E in objects]
    s = conv.sigma * sec.dual_twist
    cells = [(objects[a], objects[b], 0, 0) for a in range(k) for b in range(k)]
    cells += [(pushed[a], pushed[b], 0, 0) for a in range(k) for b in range(k)]
    cells += [(objects[b], objects[a], s, conv.delta) for a in range(k) for b in range(k)]
    dims = _dims(cells, cap, jobs)

    def grid(off):
        return [dims[off + a * k: off + (a + 1) * k] for a in range(k)]

    return DirectednessReport(grid(0), grid(k * k), grid(2 * k * k), conv)
