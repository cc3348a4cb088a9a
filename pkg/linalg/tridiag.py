"""
Tridiagonal matrices and the Thomas algorithm.
"""

import logging
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from linalg import _kernels
from linalg.banded import PIVOT_TOLERANCE, BandedMatrix, banded_factor
from linalg.errors import DimensionMismatchError

logger = logging.getLogger(__name__)

COMMUTE_TOLERANCE = 1e-13


@dataclass(frozen=True, eq=False)
class TridiagMatrix:
    """
    ``n x n`` tridiagonal matrix stored as three length-``n`` bands.

    ``lower[i]`` is M[i, i-1] and ``upper[i]`` is M[i, i+1]; ``lower[0]`` and
    ``upper[n-1]`` are always zero. Toeplitz matrices (one value per band) are
    built with :meth:`toeplitz`; arbitrary bands with :meth:`from_bands`.
    """

    lower: NDArray[np.float64]
    diag: NDArray[np.float64]
    upper: NDArray[np.float64]

    def __post_init__(self) -> None:
        n = self.diag.shape[0]
        if n < 1:
            raise ValueError("tridiagonal matrix needs n >= 1")
        if self.lower.shape != (n,) or self.upper.shape != (n,):
            raise DimensionMismatchError(
                f"bands have shapes {self.lower.shape}, {self.diag.shape}, {self.upper.shape}"
            )
        for name in ("lower", "diag", "upper"):
            band = np.array(getattr(self, name), dtype=np.float64)
            if name == "lower":
                band[0] = 0.0
            elif name == "upper":
                band[-1] = 0.0
            band.setflags(write=False)
            object.__setattr__(self, name, band)

    @classmethod
    def toeplitz(cls, n: int, sub: float, main: float, sup: float) -> "TridiagMatrix":
        """diag_n(sub, main, sup)."""
        if n < 1:
            raise ValueError(f"tridiagonal matrix needs n >= 1, got {n}")
        return cls(np.full(n, float(sub)), np.full(n, float(main)), np.full(n, float(sup)))

    @classmethod
    def from_bands(cls, sub: ArrayLike, main: ArrayLike, sup: ArrayLike) -> "TridiagMatrix":
        """Build from a sub-diagonal (n-1), diagonal (n) and super-diagonal (n-1)."""
        d = np.asarray(main, dtype=np.float64)
        lo = np.asarray(sub, dtype=np.float64)
        up = np.asarray(sup, dtype=np.float64)
        n = d.shape[0]
        if lo.shape != (n - 1,) or up.shape != (n - 1,):
            raise DimensionMismatchError(
                f"off-diagonals must have length {n - 1}, got {lo.shape} and {up.shape}"
            )
        return cls(np.concatenate(([0.0], lo)), d, np.concatenate((up, [0.0])))

    @property
    def n(self) -> int:
        return int(self.diag.shape[0])

    @property
    def is_toeplitz(self) -> bool:
        return bool(
            np.all(self.diag == self.diag[0])
            and np.all(self.lower[1:] == self.lower[1:2])
            and np.all(self.upper[:-1] == self.upper[:1])
        )

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.lower[1:], self.upper[:-1]))

    def to_dense(self) -> NDArray[np.float64]:
        idx = np.arange(self.n)
        dense = np.zeros((self.n, self.n))
        dense[idx, idx] = self.diag
        dense[idx[1:], idx[:-1]] = self.lower[1:]
        dense[idx[:-1], idx[1:]] = self.upper[:-1]
        return dense

    def to_banded(self) -> BandedMatrix:
        band = np.zeros((3, self.n))
        band[0, 1:] = self.upper[:-1]
        band[1] = self.diag
        band[2, :-1] = self.lower[1:]
        return BandedMatrix(self.n, 1, 1, band)

    def matvec(self, v: ArrayLike) -> NDArray[np.float64]:
        x = np.asarray(v, dtype=np.float64)
        if x.shape != (self.n,):
            raise DimensionMismatchError(f"vector of shape {x.shape} for size {self.n}")
        y = self.diag * x
        y[1:] += self.lower[1:] * x[:-1]
        y[:-1] += self.upper[:-1] * x[1:]
        return y

    def scaled(self, s: float) -> "TridiagMatrix":
        return TridiagMatrix(self.lower * s, self.diag * s, self.upper * s)

    def norm_inf(self) -> float:
        return float(np.max(np.abs(self.lower) + np.abs(self.diag) + np.abs(self.upper)))


def tridiag_solve(M: TridiagMatrix, rhs: ArrayLike) -> NDArray[np.float64]:
    """
    Solve ``M x = rhs`` with the Thomas algorithm.

    Falls back to the pivoted band solver when elimination without pivoting
    meets a vanishing pivot.

    Raises:
        DimensionMismatchError: If ``rhs`` does not have length ``n``
        SingularMatrixError: If ``M`` is singular to working precision
    """
    b = np.ascontiguousarray(rhs, dtype=np.float64)
    if b.shape != (M.n,):
        raise DimensionMismatchError(f"rhs of shape {b.shape} for system of size {M.n}")
    tol = PIVOT_TOLERANCE * M.norm_inf()
    x, status = _kernels.thomas(M.lower, M.diag, M.upper, b, tol)
    if status == 0:
        return x
    logger.debug(f"Thomas pivot {status} vanished; retrying with partial pivoting")
    return banded_factor(M.to_banded()).solve(b)


def commutes(A: TridiagMatrix, B: TridiagMatrix) -> bool:
    """
    True iff ``||AB - BA||_inf <= 1e-13 * ||A||_inf * ||B||_inf``.

    Raises:
        DimensionMismatchError: If the sizes differ
    """
    if A.n != B.n:
        raise DimensionMismatchError(f"cannot compare {A.n}x{A.n} with {B.n}x{B.n}")
    a, b = A.to_dense(), B.to_dense()
    commutator = a @ b - b @ a
    defect = float(np.max(np.abs(commutator).sum(axis=1)))
    return defect <= COMMUTE_TOLERANCE * A.norm_inf() * B.norm_inf()
