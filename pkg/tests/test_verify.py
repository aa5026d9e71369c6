import pytest

from mfw import (DualityConvention, GradedRing, MFWError, directedness_report, generate, koszul_rank1,
                 make_section, roundtrip_check, valid_specs, verify_family, verify_serre, verify_theorem, zero_mf)
from mfw.corpus import FamilySpec
from mfw.hom import hom_dim
from mfw.oracle import coker_presentation, stable_hom_dim

R = GradedRing(("x",), (1,))
x = R.gen("x")
E_A1 = koszul_rank1(x, x)
SEC = make_section(R, "w", 1, x ** 2, "w")
RBAR = DualityConvention(0, 1, "dim Rbar")


def test_a1_rows():
    rep = verify_theorem(E_A1, E_A1, SEC)
    assert rep.passed
    assert rep.convention == RBAR
    r = rep.row(0, 0)
    assert (r.lhs, r.summands, r.dual_twist) == (2, (1, 1), 0)
    r = rep.row(1, 0)
    assert (r.lhs, r.summands) == (0, (0, 0))


def test_literal_krull_dimension_fails_on_a1():
    rep = verify_theorem(E_A1, E_A1, SEC, conv=DualityConvention(1, 1, "dim R"))
    assert not rep.passed
    assert rep.counterexamples
    auto = verify_theorem(E_A1, E_A1, SEC)
    assert [ok for _, ok in auto.tried] == [False, True]


def test_zero_target():
    Z = zero_mf(R, x ** 2)
    rep = verify_theorem(E_A1, Z, SEC)
    assert rep.passed and all(r.lhs == 0 and r.summands == (0, 0) for r in rep.rows)


def test_bad_convention_and_section():
    with pytest.raises(MFWError):
        verify_theorem(E_A1, E_A1, SEC, conv=DualityConvention(5))
    other = koszul_rank1(x, x ** 2)
    with pytest.raises(MFWError):
        verify_theorem(other, other, SEC)


def test_serre_a1():
    rep = verify_serre(E_A1, E_A1, range(-3, 4), conv=RBAR)
    assert rep.passed
    assert [r.lhs for r in rep.rows] == [0, 0, 0, 1, 0, 0, 0]
    assert verify_serre(zero_mf(R, x ** 2), zero_mf(R, x ** 2)).passed


def test_serre_a2_against_module_oracle():
    sec, (E1, E2) = generate(FamilySpec(2, 3, 1))
    rep = verify_family([E1, E2], sec, kind="serre", twists=range(-4, 5), conv=RBAR)
    assert rep.passed
    for (s, t), r in rep.reports.items():
        E, T = (E1, E2)[s - 1], (E1, E2)[t - 1]
        for row in r.rows:
            assert row.lhs == stable_hom_dim(coker_presentation(E), coker_presentation(T), row.n)


def test_roundtrip_a1():
    out = roundtrip_check(E_A1, E_A1, SEC)
    assert out == {"induced": 2, "split": 2, "failures": []}


def test_directedness():
    sec, objs = generate(FamilySpec(2, 3, 1))
    rep = directedness_report(objs, sec)
    assert rep.hom == [[1, 0], [1, 1]]
    assert rep.push_hom == [[1, 0], [2, 1]]
    assert all(all(row) for row in rep.flags)
    single = directedness_report([E_A1], SEC)
    assert single.push_hom == [[verify_theorem(E_A1, E_A1, SEC).row(0, 0).lhs]]
    assert directedness_report([], SEC).hom == []


def test_family_finds_single_convention():
    sec, objs = generate(valid_specs()[2])
    rep = verify_family(objs, sec)
    assert rep.passed and rep.convention == RBAR
    assert set(rep.reports) == {(s, t) for s in (1, 2, 3) for t in (1, 2, 3)}
