"""
The residue field of the node
=============================

push(E_A1) is the factorization of x^2 + w^2 whose cokernel is, up to
syzygy, the residue field k.  Stable End of k itself as a module is only 1
because k is not maximal Cohen-Macaulay.  Passing to a syzygy of depth
equal to the Krull dimension gives the singularity-category answer, 2.
"""
from mfw import (coker_presentation, generate, hom_dim, hilbert_function, push, pushforward_module,
                 singular_hom_dim, stable_hom_dim, syzygy, valid_specs)

sec, (E,) = generate(valid_specs()[0])
P = push(E, sec)
k = pushforward_module(E, sec)
print("F =", sec.F)
print("Hilbert function of k on [-1, 3]:", hilbert_function(k, (-1, 3)))
print("stable End(k) as a module       :", stable_hom_dim(k, k, 0))
print("End(k) in the singularity cat.  :", singular_hom_dim(k, k, 0))
omega = syzygy(k, 1)
print("stable End(syzygy k)            :", stable_hom_dim(omega, omega, 0))
print("stable End(coker push E)        :", stable_hom_dim(coker_presentation(P), coker_presentation(P), 0))
print("End(push E) by the hom engine   :", hom_dim(P, P))
