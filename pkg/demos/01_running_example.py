"""
The A1 running example
======================

x^2 factors as x . x over k[x].  Adding a new variable w of degree 1 and
pushing forward along F = x^2 + w^2 turns that one-object category into the
node, where the residue field has a two-dimensional endomorphism space.
"""
from mfw import GradedRing, hom_dim, hom_space, koszul_rank1, make_section, push

R = GradedRing(["x"], [1])
x = R.gen("x")
E = koszul_rank1(x, x)
print("E =", E)
print("E[1] =", E.shift(1))
print("E[2] == E(2):", E.shift(2) == E.twist(2))

# Hom spaces of E in a window of twists; only degree 0 survives
for n in range(-2, 3):
    print(f"dim Hom(E, E({n})) = {hom_dim(E, E, n)}")

# the section F = f + w g with f = x^2 and g = w
sec = make_section(R, "w", 1, x * x, "w")
P = push(E, sec)
print()
print("push E =", P)
print("phi~ =", P.phi)
print("psi~ =", P.psi)

# End(push E): identity plus one new class coming from the dual summand
H = hom_space(P, P)
print("dim End(push E) =", H.dim)
for k, c in enumerate(H.class_basis()):
    print(f"  class {k}: alpha = {c.alpha}, beta = {c.beta}")
