import pytest

from mfw import (CocycleError, GradedRing, MorphismPair, SectionError, hom_space, induce_morphism, koszul_rank1,
                 make_section, push, split_morphism, zero_mf)

R = GradedRing(("x",), (1,))
x = R.gen("x")
E_A1 = koszul_rank1(x, x)
SEC = make_section(R, "w", 1, x ** 2, "w")


def test_make_section():
    assert str(SEC.F) == "x^2 + w^2" and SEC.h == 2
    assert SEC.dual_twist == 0  # r + h - a = -1 + 2 - 1
    sec = make_section(R, "w", 2, x ** 4, "w")
    assert str(sec.F) == "x^4 + w^2" and sec.h == 4
    with pytest.raises(SectionError, match="g not in wS"):
        make_section(R, "w", 1, x ** 2, "1")
    with pytest.raises(SectionError):
        make_section(R, "w", 1, "x^2 + w^2", "w")
    with pytest.raises(SectionError):
        make_section(R, "w", 1, x ** 2, "w^2")  # F inhomogeneous


def test_push_a1():
    P = push(E_A1, SEC)
    assert P.phi.to_lists() == [["x", "w"], ["-w", "x"]]
    assert P.psi.to_lists() == [["x", "-w"], ["w", "x"]]
    assert P.d == (0, 0) and P.e == (-1, -1)


def test_push_a3_section():
    sec = make_section(R, "w", 2, x ** 4, "w")
    P = push(koszul_rank1(x, x ** 3), sec)
    assert P.phi.to_lists() == [["x", "w"], ["-w", "x^3"]]
    assert P.d == (0, 1) and P.e == (-1, -2)


def test_push_zero_and_equivariance():
    assert push(zero_mf(R, x ** 2), SEC).rank == 0
    E = koszul_rank1(x, x)
    assert push(E.twist(3), SEC) == push(E, SEC).twist(3)


def test_induce_identity_gives_block_identity():
    c = induce_morphism(E_A1.identity(), hom_space(E_A1.translate(1, -1), E_A1).morphism({}), SEC)
    assert c.alpha.to_lists() == [["1", "0"], ["0", "1"]]
    assert c.beta.to_lists() == [["1", "0"], ["0", "1"]]


def test_induce_j_block_class():
    H2 = hom_space(E_A1.translate(1, -1), E_A1)
    assert H2.dim == 1
    (gen,) = H2.class_basis()
    zero1 = hom_space(E_A1, E_A1).morphism({})
    c = induce_morphism(zero1, gen, SEC)
    assert c.alpha.to_lists() == [["0", "-1"], ["1", "0"]]
    HP = hom_space(push(E_A1, SEC), push(E_A1, SEC))
    assert HP.dim == 2 and HP.is_cycle(c) and not HP.is_boundary(c)
    m1, m2 = split_morphism(c, SEC)
    assert m1.is_zero() and H2.class_coordinates(m2) == H2.class_coordinates(gen)


def test_split_identity():
    P = push(E_A1, SEC)
    m1, m2 = split_morphism(P.identity(), SEC)
    assert m1.alpha.to_lists() == [["1"]] and m2.is_zero()


def test_induce_rejects_non_cocycle():
    bad = MorphismPair(E_A1, E_A1, 0, [[1]], [[2]], check=False)
    m2 = hom_space(E_A1.translate(1, -1), E_A1).morphism({})
    with pytest.raises(CocycleError):
        induce_morphism(bad, m2, SEC)
