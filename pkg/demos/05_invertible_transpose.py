"""
Berglund-Huebsch transposes
===========================

Exponent matrices of invertible polynomials: Fermat, chain and loop types.
"""
from mfw import GradedRing, bh_transpose, exponent_matrix, weights_from_matrix

examples = [
    (("x", "y", "z"), (1, 1, 1), "x^3 + y^3 + z^3"),
    (("x", "y"), (1, 2), "x^4 + x*y^2"),
    (("x", "y", "z"), (1, 1, 1), "x^2*y + y^2*z + z^2*x"),
]

for names, weights, text in examples:
    p = GradedRing(names, weights).parse(text)
    A = exponent_matrix(p)
    q, c = weights_from_matrix(A)
    print(p)
    print("   A =", A.to_lists(), " weights", q, " degree", c)
    print("   transpose:", bh_transpose(A))
