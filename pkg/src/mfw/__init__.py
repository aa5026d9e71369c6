"""Exact computations with graded matrix factorizations.

The package is layered bottom-up:

* :mod:`mfw.scalars` - rationals and prime fields, sparse echelon forms
* :mod:`mfw.poly` - weighted polynomial rings and polynomials
* :mod:`mfw.gmatrix` - degree-checked matrices between twisted free modules
* :mod:`mfw.factorization` - factorizations, shifts, twists, morphisms
* :mod:`mfw.hom` - Hom spaces in the homotopy category
* :mod:`mfw.pushforward` - push-forward along ``F = f + w g``
* :mod:`mfw.oracle` - independent module-theoretic cross-checks
* :mod:`mfw.verify` - Hom decomposition and Serre duality harnesses
* :mod:`mfw.invertible` - exponent matrices and the Berglund-Huebsch transpose
* :mod:`mfw.corpus`, :mod:`mfw.dsl`, :mod:`mfw.runner`, :mod:`mfw.cli` - fixtures and front end
"""
from ._version import __version__
from .corpus import FamilySpec, generate, valid_specs
from .errors import (CapExceeded, CocycleError, DegreeError, ExponentMatrixError, FactorizationError,
                     FieldError, MFWError, ParseError, RingError, SectionError, ShapeError)
from .factorization import (MatrixFactorization, MorphismPair, direct_sum, koszul_rank1, mf_new,
                            translate, zero_mf, zero_morphism)
from .gmatrix import GradedMatrix, compose, graded_matrix, identity_on
from .hom import HomResult, hom_dim, hom_shifted, hom_space, hom_table
from .invertible import ExponentMatrix, bh_transpose, exponent_matrix, weights_from_matrix
from .oracle import (PresentedModule, QuotientRing, coker_presentation, ext_dim_periodic,
                     hilbert_function, module_hom_dim, pushforward_module, singular_hom_dim,
                     stable_hom_dim, syzygy)
from .poly import GradedRing, Poly, degree_of, make_ring, monomials_of_degree, parse_poly
from .pushforward import SectionData, induce_morphism, make_section, push, split_morphism
from .scalars import QQ, Echelon, Field, Matrix, make_field
from .verify import (DualityConvention, VerifyReport, directedness_report, roundtrip_check,
                     verify_family, verify_serre, verify_theorem)

__all__ = [name for name in dir() if not name.startswith("_")]
