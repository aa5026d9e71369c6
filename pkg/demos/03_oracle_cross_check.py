"""
Two independent Hom computations
================================

The homotopy-category engine solves for chain maps modulo homotopy.  The
module oracle works with the cokernel of phi as a graded module over
R/(f) and computes stable Hom and Ext by degree-wise linear algebra.  Both
should agree on every cell.
"""
from mfw import (coker_presentation, ext_dim_periodic, generate, hom_dim, stable_hom_dim,
                 valid_specs)

mismatches = 0
cells = 0
for spec in valid_specs(3):
    sec, objs = generate(spec)
    for E in objs:
        for T in objs:
            ME, MT = coker_presentation(E), coker_presentation(T)
            for m in range(-4, 5):
                cells += 2
                mismatches += hom_dim(E, T, m) != stable_hom_dim(ME, MT, m)
                mismatches += hom_dim(E, T, m, 1) != ext_dim_periodic(E, T, 1, m)
    print(f"{spec.name:14s} objects={len(objs)}")

print(f"{cells} cells compared, {mismatches} mismatches")
