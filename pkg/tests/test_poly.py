import pickle

import pytest
from hypothesis import given, settings, strategies as st

from mfw.errors import ParseError, RingError
from mfw.expr import format_expr, parse_expression
from mfw.poly import INHOMOGENEOUS, GradedRing, degree_of, extend_ring, make_ring, monomials_of_degree
from mfw.scalars import Field, QQ


def test_a_invariant_and_extension():
    R = make_ring(["x"], [1], QQ)
    assert R.a_invariant == -1
    S = extend_ring(R, "w", 1)
    assert S.names == ("x", "w") and S.weights == (1, 1)
    assert S.contains_ring(R)
    with pytest.raises(RingError):
        extend_ring(R, "x", 1)


@pytest.mark.parametrize("names, weights", [(("x", "x"), (1, 1)), (("x",), (0,)), (("x",), (1, 2))])
def test_bad_rings(names, weights):
    with pytest.raises(RingError):
        GradedRing(names, weights)


def test_degrees():
    R = GradedRing(("x",), (1,))
    assert degree_of(R.parse("x^2")) == 2
    assert degree_of(R.parse("x + x^2")) == INHOMOGENEOUS
    assert degree_of(R.zero()) is None


def test_monomials_of_degree():
    R = GradedRing(("x", "y"), (1, 2))
    assert monomials_of_degree(R, 4) == ((4, 0), (2, 1), (0, 2))
    assert monomials_of_degree(R, -1) == ()
    assert monomials_of_degree(GradedRing(("x",), (1,)), 3) == ((3,),)
    assert [R.dim(m) for m in range(-1, 6)] == [0, 1, 1, 2, 2, 3, 3]


def test_arithmetic_and_substitution():
    S = GradedRing(("x", "w"), (1, 1))
    p = S.parse("(x + w)^2")
    assert p == S.parse("x^2 + 2*x*w + w^2")
    assert p.substitute_zero("w") == S.parse("x^2")
    assert S.parse("w^3 + x*w").divide_by_var("w") == S.parse("w^2 + x")
    assert S.parse("x - x") == 0
    assert p.variables() == {"x", "w"}


def test_canonical_print_round_trip():
    R = GradedRing(("x", "y"), (1, 1))
    p = R.parse("y^2/3 + 2*x^2*y - 2*x*y/3 + x^2/3")
    assert str(p) == "2*x^2*y + x^2/3 - 2*x*y/3 + y^2/3"
    assert R.parse(str(p)) == p


def test_prime_field_coefficients():
    R = GradedRing(("x",), (1,), Field(5))
    assert R.parse("6*x") == R.parse("x")
    assert R.parse("x/2") == R.parse("3*x")


def test_unknown_variable_is_positioned():
    R = GradedRing(("x",), (1,))
    with pytest.raises(ParseError) as info:
        R.parse("x + y")
    assert info.value.column == 5


def test_division_only_by_integers():
    R = GradedRing(("x",), (1,))
    with pytest.raises(ParseError):
        R.parse("x/x")
    with pytest.raises(ParseError):
        R.parse("x/0")


def test_pickle():
    R = GradedRing(("x", "y"), (1, 2), Field(7))
    p = R.parse("x^2 + 3*y")
    assert pickle.loads(pickle.dumps(p)) == p


def test_expr_format_round_trip():
    for text in ["-(x + y)^2", "x - (y - 1)", "(x^2)^3", "x*(y + 2)/3", "-x^2"]:
        e = parse_expression(text)
        assert parse_expression(format_expr(e)) == e


weights = st.lists(st.integers(1, 3), min_size=1, max_size=3)


@st.composite
def homogeneous(draw, ring):
    m = draw(st.integers(0, 5))
    monos = ring.monomials_of_degree(m)
    coeffs = draw(st.lists(st.integers(-5, 5), min_size=len(monos), max_size=len(monos)))
    p = ring.zero()
    for mono, c in zip(monos, coeffs):
        p = p + ring.monomial(mono, c)
    return p


@settings(max_examples=60, deadline=None)
@given(st.data(), weights)
def test_multiplication_is_homogeneous(data, ws):
    R = GradedRing([f"x{i}" for i in range(len(ws))], ws)
    p, q = data.draw(homogeneous(R)), data.draw(homogeneous(R))
    if p and q:
        assert (p * q).degree == p.degree + q.degree
    assert R.parse(str(p * q - q)) == p * q - q
    for m in range(0, 6):
        assert R.dim(m) == len(R.monomials_of_degree(m))
