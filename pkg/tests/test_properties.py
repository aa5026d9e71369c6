"""Randomized structural invariants of the homotopy category and push-forward."""
import random

from hypothesis import given, settings, strategies as st

from _gen import random_family, random_mf, random_pair, random_section
from mfw import direct_sum, hom_dim, hom_space, push
from mfw.oracle import coker_presentation, hilbert_function, pushforward_module

seeds = st.integers(0, 2**32).map(random.Random)
EXAMPLES = 60


@settings(max_examples=EXAMPLES)
@given(seeds)
def test_boundaries_are_cycles(rng):
    E, T = random_pair(rng)
    for n in range(-2, 3):
        H = hom_space(E, T, n)
        assert H.boundary_dim <= H.cycle_dim
        for b in H.boundary_basis:
            assert H._core.is_cycle(b)
        for m in H.class_basis():
            assert m.defect() is None


@settings(max_examples=EXAMPLES)
@given(seeds, st.integers(-3, 3), st.integers(-2, 2))
def test_twist_equivariance(rng, c, n):
    E, T = random_pair(rng)
    assert hom_dim(E.twist(c), T.twist(c + n)) == hom_dim(E, T, n)
    assert hom_dim(E, T.twist(1), n) == hom_dim(E, T, n + 1)


@settings(max_examples=EXAMPLES)
@given(seeds, st.integers(-2, 2), st.integers(-2, 2))
def test_two_periodicity(rng, i, n):
    E, T = random_pair(rng)
    assert E.shift(2) == E.twist(E.h)
    assert E.shift(1).shift(-1) == E
    assert hom_dim(E, T, n, i + 2) == hom_dim(E, T, n + E.h, i)


@settings(max_examples=EXAMPLES)
@given(seeds, st.integers(-2, 2), st.integers(-1, 1))
def test_direct_sum_additivity(rng, n, i):
    ring, factors = random_family(rng)
    E, E2, T = (random_mf(rng, ring, factors, 2) for _ in range(3))
    S = direct_sum(E, E2)
    assert hom_dim(S, T, n, i) == hom_dim(E, T, n, i) + hom_dim(E2, T, n, i)
    assert hom_dim(T, S, n, i) == hom_dim(T, E, n, i) + hom_dim(T, E2, n, i)


@settings(max_examples=EXAMPLES)
@given(seeds)
def test_deep_negative_twists_vanish(rng):
    E, T = random_pair(rng)
    lo = min([a - b for a in E.d for b in T.d] + [a - b for a in E.e for b in T.e])
    for n in range(lo - 3, lo):
        H = hom_space(E, T, n)
        assert H.cycle_dim == 0 and H.dim == 0


@settings(max_examples=EXAMPLES)
@given(seeds)
def test_push_validates_and_restricts(rng):
    E = random_mf(rng)
    sec = random_section(rng, E)
    P = push(E, sec)
    assert P.rank == 2 * E.rank
    F = sec.F
    for prod in (P.phi @ P.psi, P.psi @ P.phi):
        for j, row in enumerate(prod.entries):
            for i, p in enumerate(row):
                assert p == (F if i == j else 0)
    assert push(E.twist(2), sec) == P.twist(2)
    window = (min(E.d) - 2, max(E.d) + E.h + 2)
    assert hilbert_function(pushforward_module(E, sec), window) == hilbert_function(coker_presentation(E), window)
