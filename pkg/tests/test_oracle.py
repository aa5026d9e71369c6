import pytest

from mfw import (GradedRing, MFWError, PresentedModule, QuotientRing, coker_presentation, ext_dim_periodic,
                 hilbert_function, hom_dim, koszul_rank1, make_section, module_hom_dim, push, pushforward_module,
                 singular_hom_dim, stable_hom_dim, syzygy, zero_mf)
from mfw.gmatrix import GradedMatrix

R = GradedRing(("x",), (1,))
x = R.gen("x")
E_A1 = koszul_rank1(x, x)
K = coker_presentation(E_A1)


def test_coker_presentations():
    assert K.gens == (0,) and K.relations.to_lists() == [["x"]]
    assert hilbert_function(K, (0, 3)) == [1, 0, 0, 0]
    M = coker_presentation(koszul_rank1(x ** 2, x))
    assert hilbert_function(M, (0, 3)) == [1, 1, 0, 0]
    Rbar = QuotientRing(R, x ** 2).free((0,))
    assert hilbert_function(Rbar, (0, 3)) == [1, 1, 0, 0]
    assert coker_presentation(zero_mf(R, x ** 2)).gens == ()
    assert hilbert_function(coker_presentation(zero_mf(R, x ** 2)), (-2, 2)) == [0] * 5


def test_stable_homs_over_dual_numbers():
    assert module_hom_dim(K, K, 0) == 1
    assert stable_hom_dim(K, K, 0) == 1
    assert stable_hom_dim(K, K, 1) == 0
    # the free module is zero in the stable category
    F = K.free_cover()
    assert module_hom_dim(F, F, 0) == 1 and stable_hom_dim(F, F, 0) == 0


def test_ext_examples():
    assert ext_dim_periodic(E_A1, E_A1, 1, -1) == 1
    assert ext_dim_periodic(E_A1, E_A1, 1, 0) == 0
    assert ext_dim_periodic(E_A1, E_A1, 2, -2) == 1
    with pytest.raises(MFWError):
        ext_dim_periodic(E_A1, E_A1, 0, 0)


def test_ext_periodicity():
    E = koszul_rank1(x ** 2, x ** 3)
    T = koszul_rank1(x, x ** 4)
    for i in (1, 2):
        for n in range(-6, 4):
            assert ext_dim_periodic(E, T, i + 2, n) == ext_dim_periodic(E, T, i, n + E.h)


def test_quotient_mismatch():
    other = coker_presentation(koszul_rank1(x, x ** 2))
    with pytest.raises(MFWError):
        stable_hom_dim(K, other)


def test_residue_field_over_the_node():
    """k over k[x,w]/(x^2+w^2) is not maximal Cohen-Macaulay.

    Its literal stable End is only the identity class (1), while in the
    singularity category (computed on the first syzygy) End is 2, matching
    the factorization side.
    """
    sec = make_section(R, "w", 1, x ** 2, "w")
    k = pushforward_module(E_A1, sec)
    assert hilbert_function(k, (-1, 3)) == [0, 1, 0, 0, 0]
    assert stable_hom_dim(k, k, 0) == 1
    assert singular_hom_dim(k, k, 0) == 2
    P = push(E_A1, sec)
    assert hom_dim(P, P) == 2
    assert stable_hom_dim(coker_presentation(P), coker_presentation(P), 0) == 2
    # the first syzygy of k is the maximal ideal: two generators in degree 1
    omega = syzygy(k, 1)
    assert omega.gens == (-1, -1)
    assert hilbert_function(omega, (0, 4)) == [0, 2, 2, 2, 2]


def test_restriction_of_scalars_hilbert():
    sec = make_section(R, "w", 2, x ** 4, "w")
    for s in (1, 2, 3):
        E = koszul_rank1(x ** s, x ** (4 - s))
        assert hilbert_function(pushforward_module(E, sec), (-3, 8)) == hilbert_function(coker_presentation(E), (-3, 8))


def test_presented_module_checks():
    Q = QuotientRing(R, x ** 2)
    with pytest.raises(MFWError):
        PresentedModule(Q, (0,), GradedMatrix(R, (1,), (0,), [[x]]))
