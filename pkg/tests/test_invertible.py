import pytest

from mfw import ExponentMatrix, ExponentMatrixError, GradedRing, bh_transpose, exponent_matrix, weights_from_matrix

XY = GradedRing(("x", "y"), (1, 1))


def test_exponent_matrices():
    assert exponent_matrix(XY.parse("x^2*y + y^3")).to_lists() == [[2, 1], [0, 3]]
    assert exponent_matrix(GradedRing(("x", "w"), (1, 1)).parse("x^2 + w^2")).to_lists() == [[2, 0], [0, 2]]
    with pytest.raises(ExponentMatrixError):
        exponent_matrix(XY.parse("x^2 + x*y + y^2"))
    with pytest.raises(ExponentMatrixError):
        exponent_matrix(XY.parse("2*x^2 + y^2"))


def test_pairing_follows_the_variable():
    # canonical order lists x*z^2 before y^2*z; rows follow the variables instead
    R = GradedRing(("x", "y", "z"), (1, 1, 1))
    A = exponent_matrix(R.parse("x^2*y + y^2*z + z^2*x"))
    assert A.to_lists() == [[2, 1, 0], [0, 2, 1], [1, 0, 2]]
    assert str(bh_transpose(A)) == "x^2*z + x*y^2 + y*z^2"


def test_transpose_chain():
    A = exponent_matrix(XY.parse("x^2*y + y^3"))
    t = bh_transpose(A)
    assert str(t) == "x^2 + x*y^3"
    assert exponent_matrix(t).to_lists() == A.transpose().to_lists()
    assert str(bh_transpose(t)) == "x^2*y + y^3"


def test_transpose_fixes_diagonal():
    p = GradedRing(("x", "w"), (1, 1)).parse("x^2 + w^2")
    assert str(bh_transpose(p)) == "x^2 + w^2"


def test_weights():
    assert weights_from_matrix(ExponentMatrix(((2, 0), (0, 2)), ("x", "w"))) == ((1, 1), 2)
    assert weights_from_matrix(ExponentMatrix(((2, 1), (0, 3)), ("x", "y"))) == ((1, 1), 3)
    with pytest.raises(ExponentMatrixError):
        ExponentMatrix(((1, 1), (1, 1)), ("x", "y"))


@pytest.mark.parametrize("text, names", [
    ("x^2*y + y^2*z + z^3", ("x", "y", "z")),
    ("x^2*y + y^2*x", ("x", "y")),
    ("x^3 + y^5", ("x", "y")),
    ("x^2*y + y^3*z + z^4*x", ("x", "y", "z")),
])
def test_involution_and_homogeneity(text, names):
    R = GradedRing(names, (1,) * len(names))
    A = exponent_matrix(R.parse(text))
    w, c = weights_from_matrix(A)
    p = A.polynomial()
    assert p.ring.weights == w and p.degree == c
    t = bh_transpose(A)
    tw, tc = weights_from_matrix(A.transpose())
    assert t.degree == tc
    assert exponent_matrix(t).to_lists() == A.transpose().to_lists()
    assert exponent_matrix(bh_transpose(t)).to_lists() == A.to_lists()
