"""
Directedness of the A-series
============================

Over k[x] with f = x^(n+1) the Koszul objects E_s = [x^s, x^(n+1-s)]
satisfy dim Hom(E_s, E_t) = 1 exactly when s >= t.  After push-forward the
backward direction is filled in by the dual summand.
"""
from mfw import FamilySpec, directedness_report, generate


def show(name, table):
    print(name)
    for row in table:
        print("   ", " ".join(f"{v:2d}" for v in row))


spec = FamilySpec(3, 2, 2)      # F = x^4 + w^2
sec, objects = generate(spec)
print(spec.name, "F =", sec.F)

rep = directedness_report(objects, sec)
show("Hom(E_s, E_t)", rep.hom)
show("Hom(E_t, E_s) dual part", rep.dual)
show("Hom(push E_s, push E_t)", rep.push_hom)
print("push = forward + dual everywhere:", all(all(r) for r in rep.flags))
print("convention:", rep.convention.describe())
