"""Built-in A-series family.

``A<n>`` is ``f = x^(n+1)`` over ``k[x]`` with the Koszul objects
``E_s = (x^s, x^(n+1-s))`` for ``s = 1..n``.  A section is chosen by a
factorization ``n + 1 = c * a`` with ``c >= 2``: ``w`` has degree ``a`` and
``F = x^(n+1) + w^c`` (so ``g = w^(c-1)``).
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import MFWError
from .factorization import MatrixFactorization, koszul_rank1
from .poly import GradedRing
from .pushforward import SectionData, make_section
from .scalars import QQ


@dataclass(frozen=True)
class FamilySpec:
    n: int
    c: int
    a: int
    kind: str = "A"

    def __post_init__(self):
        if self.kind != "A":
            raise MFWError(f"only the A-series is built in, not {self.kind!r}")
        if self.n < 1:
            raise MFWError("n must be at least 1")
        if self.c < 2:
            raise MFWError("c must be at least 2 so that g = w^(c-1) lies in wS")
        if self.c * self.a != self.n + 1:
            raise MFWError(f"c * a = {self.c * self.a} but n + 1 = {self.n + 1}")

    @property
    def name(self) -> str:
        return f"A{self.n}(c={self.c},a={self.a})"


def valid_specs(max_n: int = 5) -> list[FamilySpec]:
    """All ``(n, c, a)`` with ``n <= max_n``, ordered by ``n`` then ``c``."""
    return [FamilySpec(n, c, (n + 1) // c)
            for n in range(1, max_n + 1) for c in range(2, n + 2) if (n + 1) % c == 0]


def generate(spec: FamilySpec, field=QQ) -> tuple[SectionData, list[MatrixFactorization]]:
    R = GradedRing(("x",), (1,), field)
    x = R.gen("x")
    n = spec.n
    sec = make_section(R, "w", spec.a, x ** (n + 1), f"w^{spec.c - 1}")
    objects = [koszul_rank1(x ** s, x ** (n + 1 - s)) for s in range(1, n + 1)]
    return sec, objects


def _poly(exp: int) -> str:
    return "x" if exp == 1 else f"x^{exp}"


def program_text(spec: FamilySpec) -> str:
    """``.mfw`` source declaring the family and its standard queries."""
    n, c, a = spec.n, spec.c, spec.a
    h = n + 1
    f = f"x^{h}"
    lines = [
        f"# A{n} with F = x^{h} + w^{c}, deg w = {a}",
        "field Q;",
        "ring R { x:1 };",
        f"section S = R + w:{a} with f = {f}, g = w{'' if c == 2 else f'^{c - 1}'};",
    ]
    for s in range(1, n + 1):
        lines.append(f"mf E{s} over (R, {f}) {{ d=[0]; e=[{-s}]; "
                     f"phi=[[{_poly(s)}]]; psi=[[{_poly(h - s)}]]; }}")
    names = " ".join(f"E{s}" for s in range(1, n + 1))
    lines.append(f"query homtable E1 E1 shifts -1..1 twists {-(h + 2)}..{h + 2};")
    lines.append(f"query directed {names} section S;")
    for s in range(1, n + 1):
        for t in range(1, n + 1):
            lines.append(f"query verify-theorem E{s} E{t} section S shifts -3..3 "
                         f"twists {-(h + 2)}..{h + 2};")
    return "\n".join(lines) + "\n"
