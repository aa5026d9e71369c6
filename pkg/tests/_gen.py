"""Random factorizations built from rank-one Koszul blocks.

Everything is driven by a ``random.Random`` so the same generator serves
seeded loops and hypothesis (via ``st.randoms``).
"""
import random

from mfw import GradedRing, direct_sum, koszul_rank1, make_section
from mfw.scalars import Field, QQ

GF = Field(32003)
FIELDS = (QQ, GF)


def random_ring(rng: random.Random, field=None, nvars: int = None) -> GradedRing:
    field = field if field is not None else rng.choice(FIELDS)
    nvars = nvars or rng.choice((1, 2))
    if nvars == 1:
        return GradedRing(("x",), (rng.choice((1, 2)),), field)
    return GradedRing(("x", "y"), (rng.choice((1, 2)), rng.choice((1, 2))), field)


def random_form(rng: random.Random, ring: GradedRing, degree: int):
    """Nonzero homogeneous polynomial of the given degree (None if R_degree = 0)."""
    monos = ring.monomials_of_degree(degree)
    if not monos:
        return None
    while True:
        terms = [(m, rng.randint(-3, 3)) for m in monos if rng.random() < 0.7]
        p = ring.zero()
        for m, c in terms:
            p = p + ring.monomial(m, c)
        if p:
            return p


def random_factors(rng: random.Random, ring: GradedRing, k: int = None) -> list:
    """Between 1 and 3 homogeneous factors of small positive degree."""
    k = k or rng.randint(1, 3)
    out = []
    while len(out) < k:
        p = random_form(rng, ring, rng.randint(1, 3))
        if p is not None:
            out.append(p)
    return out


def _product(ring, ps):
    out = ring.one()
    for p in ps:
        out = out * p
    return out


def random_block(rng: random.Random, ring: GradedRing, factors: list):
    """``koszul(u, f/u)`` for ``u`` a product of a random subset of ``factors``."""
    mask = [rng.random() < 0.5 for _ in factors]
    u = _product(ring, [p for p, m in zip(factors, mask) if m])
    v = _product(ring, [p for p, m in zip(factors, mask) if not m])
    return koszul_rank1(u, v).twist(rng.randint(-2, 2))


def random_mf(rng: random.Random, ring: GradedRing = None, factors: list = None, max_blocks: int = 3):
    ring = ring or random_ring(rng)
    factors = factors or random_factors(rng, ring)
    blocks = [random_block(rng, ring, factors) for _ in range(rng.randint(1, max_blocks))]
    return direct_sum(*blocks)


def random_family(rng: random.Random):
    """A ring and factors; any ``random_mf`` built from them shares one polynomial."""
    ring = random_ring(rng)
    return ring, random_factors(rng, ring)


def random_pair(rng: random.Random, max_blocks: int = 2):
    """Two factorizations of the same polynomial."""
    ring, factors = random_family(rng)
    return (random_mf(rng, ring, factors, max_blocks), random_mf(rng, ring, factors, max_blocks))


def random_section(rng: random.Random, E):
    """A section ``F = f + w g`` for ``E``'s polynomial with ``g`` in ``wS``."""
    R, f = E.ring, E.f
    h = f.degree
    a = rng.choice([x for x in (1, 2, 3) if x <= h] or [1])
    S = R.extend("w", a)
    rest = h - 2 * a
    if rest < 0:
        g = S.zero()
    else:
        q = random_form(rng, S, rest)
        g = S.gen("w") * q if q is not None else S.zero()
    return make_section(R, "w", a, f, g)
