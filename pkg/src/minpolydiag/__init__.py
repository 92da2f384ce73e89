"""Test matrices for diagonalizability through their minimal polynomial.

The minimal polynomial is built directly from the first linear dependence
among the powers ``E, M, M**2, ...``; the matrix is diagonalizable exactly
when that polynomial shares no factor with its derivative.
"""

from ._kernels import BACKEND
from .diagnosis import (
    DiagnosisReport,
    EigenEntry,
    ToleranceConfig,
    diagnose,
    oracle_minimal_polynomial,
    pt_symmetry_check,
)
from .matrix import ComplexMatrix, MatVector, devectorize, frobenius_inner, kernel_basis, mat_power, vectorize
from .minpoly import MinPolyResult, characteristic_from_minimal, minimal_polynomial
from .poly import (
    GenPolynomial,
    MonicPolynomial,
    derivative,
    discriminant,
    gcd,
    poly_divmod,
    roots,
)
from .ptwell import Convention, MatrixFamily, PTWellConfig, build_ptwell, ptwell_family
from .scalar import GaussRational, Mode
from .sweep import Detector, ExceptionalPoint, SweepConfig, sweep

__all__ = [
    "BACKEND", "ComplexMatrix", "Convention", "Detector", "DiagnosisReport", "EigenEntry",
    "ExceptionalPoint", "GaussRational", "GenPolynomial", "MatVector", "MatrixFamily",
    "MinPolyResult", "Mode", "MonicPolynomial", "PTWellConfig", "SweepConfig", "ToleranceConfig",
    "build_ptwell", "characteristic_from_minimal", "derivative", "devectorize", "diagnose",
    "discriminant", "frobenius_inner", "gcd", "kernel_basis", "mat_power", "minimal_polynomial",
    "oracle_minimal_polynomial", "poly_divmod", "pt_symmetry_check", "ptwell_family", "roots",
    "sweep", "vectorize",
]
