import pickle

import pytest

from mfw import (CocycleError, FactorizationError, MFWError, GradedRing, MorphismPair, direct_sum, hom_space,
                 koszul_rank1, mf_new, translate, zero_mf)

R = GradedRing(("x",), (1,))
x = R.gen("x")
E_A1 = mf_new(R, x ** 2, (0,), (-1,), [[x]], [[x]])


def test_validation():
    with pytest.raises(FactorizationError, match="expected x\\^2"):
        mf_new(R, x ** 2, (0,), (-1,), [[x]], [[2 * x]])
    # x * x^2 is not x^2; the degree check already rejects psi
    with pytest.raises(MFWError):
        mf_new(R, x ** 2, (0,), (-1,), [[x]], [[x ** 2]])
    Z = zero_mf(R, x ** 2)
    assert Z.rank == 0


def test_koszul():
    E = koszul_rank1(x, x ** 3)
    assert E.f == x ** 4 and E.e == (-1,)
    F = koszul_rank1(x ** 2, x)
    assert F.f == x ** 3 and F.e == (-2,)


def test_translate_examples():
    E1 = E_A1.twist(1)
    assert (E1.d, E1.e) == ((1,), (0,))
    assert translate(E_A1, 2, 0) == E_A1.twist(2)
    S = E_A1.shift(1)
    assert (S.d, S.e) == ((1,), (0,))
    assert S.phi.entries[0][0] == -x and S.psi.entries[0][0] == -x
    assert S.shift(-1) == E_A1


def test_shift_iso_to_twist():
    H = hom_space(E_A1.shift(1), E_A1, 1)
    assert H.dim == 1
    (m,) = H.class_basis()
    assert m.alpha.entries[0][0] != 0 and m.beta.entries[0][0] != 0


def test_shift_and_twist_commute():
    E = direct_sum(koszul_rank1(x, x ** 3), koszul_rank1(x ** 2, x ** 2).twist(1))
    for i in range(-2, 3):
        for n in range(-2, 3):
            assert E.translate(i, n).translate(1, 1) == E.translate(i + 1, n + 1)
    assert E.shift(2) == E.twist(E.h)


def test_direct_sum():
    Z = zero_mf(R, x ** 2)
    assert direct_sum(E_A1, Z) == E_A1
    D = direct_sum(E_A1, E_A1)
    assert D.rank == 2
    assert hom_space(D, E_A1).dim == 2 * hom_space(E_A1, E_A1).dim == 2
    with pytest.raises(FactorizationError):
        direct_sum(E_A1, koszul_rank1(x, x ** 2))


def test_identity_and_cocycle_check():
    E = direct_sum(koszul_rank1(x, x ** 2), koszul_rank1(x ** 2, x))
    assert E.identity().defect() is None
    with pytest.raises(CocycleError):
        MorphismPair(E_A1, E_A1, 0, [[1]], [[2]])


def test_pickle_round_trip():
    assert pickle.loads(pickle.dumps(E_A1)) == E_A1
