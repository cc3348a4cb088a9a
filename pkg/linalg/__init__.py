"""
Dense and banded linear algebra for the compact beam scheme.

Modules:
- tridiag: Tridiagonal matrices, Thomas solver, commutativity check
- banded: Packed band storage and pivoted band LU
- dense: Dense Gaussian elimination
- eigen: Balancing, Hessenberg reduction and Francis QR eigenvalues
"""

from linalg.banded import BandedFactorization, BandedMatrix, banded_factor
from linalg.dense import dense_solve
from linalg.eigen import Spectrum, eigenvalues, gershgorin_discs, spectral_radius
from linalg.errors import DimensionMismatchError, SingularMatrixError
from linalg.tridiag import TridiagMatrix, commutes, tridiag_solve

__all__ = [
    "TridiagMatrix",
    "tridiag_solve",
    "commutes",
    "BandedMatrix",
    "BandedFactorization",
    "banded_factor",
    "dense_solve",
    "Spectrum",
    "eigenvalues",
    "spectral_radius",
    "gershgorin_discs",
    # Errors
    "SingularMatrixError",
    "DimensionMismatchError",
]
