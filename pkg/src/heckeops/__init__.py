"""Exact Hecke-operator calculations on rational power series.

The package computes with the sifting operators U_p that keep every p-th
series coefficient, acting on rational functions whose numerator degree is
strictly below the denominator degree and whose denominator has nonzero
constant term.  All arithmetic is exact over cyclotomic fields.

Layers, bottom to top: cyclotomic numbers, polynomials and linear algebra,
rational functions with pole analysis, the operators themselves, eigen
machinery (spectra, graded spaces, characters), spectral zeta truncations,
the recorded reference table, and a command-line interface.
"""

from __future__ import annotations

from .appendix import EigenPair, eigen_table, level_seven_pair, verify_appendix
from .cyclotomic import CycNum, format_cyc, root_of_unity
from .eigen import (
    DirichletChar,
    admissible_denominators,
    candidate_eigenvalues,
    char_eigenfunction,
    classify_multiplicative,
    eigen_data,
    eigenspace,
    eulerian_poly,
    matrix_B,
    phi_k,
    simultaneous_classify,
    space_basis,
    spectrum_profile,
)
from .errors import (
    DegreeViolation,
    DuplicatePrime,
    HeckeError,
    InternalMismatch,
    NonUniformMultiplicity,
    NotAnEigenfunction,
    PoleNotRootOfUnity,
    SBelowAbscissa,
)
from .expr import parse_ratfun
from .hecke import eigenvalue_of, hecke_apply, kernel_element
from .polynomial import Poly
from .ratfun import RatFun, format_poly, format_ratfun, pole_factors
from .cli import (
    CanonicalForm,
    ScanReport,
    canonical_form,
    conjecture_scan,
    main,
    run,
    unimodality_check,
)
from .zeta import (
    TensorElement,
    eigen_witness,
    spectrum_Up,
    tensor_apply,
    tensor_spectrum,
    witness_verified,
    zeta_US,
    zeta_U_truncated,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalForm",
    "CycNum",
    "DegreeViolation",
    "DirichletChar",
    "DuplicatePrime",
    "EigenPair",
    "HeckeError",
    "InternalMismatch",
    "NonUniformMultiplicity",
    "NotAnEigenfunction",
    "Poly",
    "PoleNotRootOfUnity",
    "RatFun",
    "SBelowAbscissa",
    "ScanReport",
    "TensorElement",
    "admissible_denominators",
    "candidate_eigenvalues",
    "canonical_form",
    "char_eigenfunction",
    "classify_multiplicative",
    "conjecture_scan",
    "eigen_data",
    "eigen_table",
    "eigen_witness",
    "eigenspace",
    "eigenvalue_of",
    "eulerian_poly",
    "format_cyc",
    "format_poly",
    "format_ratfun",
    "hecke_apply",
    "kernel_element",
    "level_seven_pair",
    "main",
    "matrix_B",
    "parse_ratfun",
    "phi_k",
    "pole_factors",
    "root_of_unity",
    "run",
    "simultaneous_classify",
    "space_basis",
    "spectrum_Up",
    "spectrum_profile",
    "tensor_apply",
    "tensor_spectrum",
    "unimodality_check",
    "verify_appendix",
    "witness_verified",
    "zeta_US",
    "zeta_U_truncated",
]
