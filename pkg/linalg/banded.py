"""
Banded matrices in LAPACK-style packed storage and their pivoted LU.

Entry M[i, j] of an ``n x n`` matrix with ``kl`` sub- and ``ku``
super-diagonals lives at ``band[ku + i - j, j]``.
"""

import logging
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from linalg import _kernels
from linalg.errors import DimensionMismatchError, SingularMatrixError

logger = logging.getLogger(__name__)

PIVOT_TOLERANCE = 1e-14


def _diagonal_span(n: int, d: int) -> tuple[int, int]:
    """Column range [lo, hi) of the diagonal with offset d = i - j."""
    lo = max(0, -d)
    return lo, max(lo, min(n, n - d))


@dataclass(frozen=True, eq=False)
class BandedMatrix:
    """Square matrix stored by diagonals."""

    n: int
    kl: int
    ku: int
    band: NDArray[np.float64]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"dimension must be >= 1, got {self.n}")
        if self.kl < 0 or self.ku < 0:
            raise ValueError(f"bandwidths must be non-negative, got kl={self.kl} ku={self.ku}")
        expected = (self.kl + self.ku + 1, self.n)
        if self.band.shape != expected:
            raise DimensionMismatchError(
                f"band storage has shape {self.band.shape}, expected {expected}"
            )
        band = np.array(self.band, dtype=np.float64, order="C")
        # entries that fall outside the matrix are kept structurally zero
        for k in range(self.kl + self.ku + 1):
            lo, hi = _diagonal_span(self.n, k - self.ku)
            band[k, :lo] = 0.0
            band[k, hi:] = 0.0
        band.setflags(write=False)
        object.__setattr__(self, "band", band)

    @classmethod
    def zeros(cls, n: int, kl: int, ku: int) -> "BandedMatrix":
        return cls(n, kl, ku, np.zeros((kl + ku + 1, n)))

    @classmethod
    def from_dense(cls, M: ArrayLike, kl: int, ku: int) -> "BandedMatrix":
        """
        Pack a dense square matrix.

        Raises:
            ValueError: If a nonzero entry lies outside the requested band
        """
        dense = np.asarray(M, dtype=np.float64)
        if dense.ndim != 2 or dense.shape[0] != dense.shape[1]:
            raise DimensionMismatchError(f"expected a square matrix, got shape {dense.shape}")
        n = dense.shape[0]
        outside = np.tril(dense, -kl - 1) + np.triu(dense, ku + 1)
        if np.any(outside != 0.0):
            raise ValueError(f"matrix has entries outside the band kl={kl}, ku={ku}")
        band = np.zeros((kl + ku + 1, n))
        for d in range(-ku, kl + 1):
            lo, hi = _diagonal_span(n, d)
            cols = np.arange(lo, hi)
            band[ku + d, lo:hi] = dense[cols + d, cols]
        return cls(n, kl, ku, band)

    def to_dense(self) -> NDArray[np.float64]:
        dense = np.zeros((self.n, self.n))
        for d in range(-self.ku, self.kl + 1):
            lo, hi = _diagonal_span(self.n, d)
            cols = np.arange(lo, hi)
            dense[cols + d, cols] = self.band[self.ku + d, lo:hi]
        return dense

    def diagonal(self, d: int) -> NDArray[np.float64]:
        """Entries of the diagonal with offset ``d = i - j``."""
        if not -self.ku <= d <= self.kl:
            return np.zeros(max(0, self.n - abs(d)))
        lo, hi = _diagonal_span(self.n, d)
        return self.band[self.ku + d, lo:hi].copy()

    def matvec(self, v: ArrayLike) -> NDArray[np.float64]:
        x = np.ascontiguousarray(v, dtype=np.float64)
        if x.shape != (self.n,):
            raise DimensionMismatchError(f"vector of length {x.shape} for {self.n}x{self.n} matrix")
        return _kernels.band_matvec(self.band, self.kl, self.ku, x)

    def norm_inf(self) -> float:
        sums = np.zeros(self.n)
        for d in range(-self.ku, self.kl + 1):
            lo, hi = _diagonal_span(self.n, d)
            sums[lo + d : hi + d] += np.abs(self.band[self.ku + d, lo:hi])
        return float(sums.max())

    def widened(self, kl: int, ku: int) -> "BandedMatrix":
        """Same matrix stored with (at least) the given bandwidths."""
        kl, ku = max(kl, self.kl), max(ku, self.ku)
        band = np.zeros((kl + ku + 1, self.n))
        band[ku - self.ku : ku - self.ku + self.kl + self.ku + 1] = self.band
        return BandedMatrix(self.n, kl, ku, band)

    def scaled(self, s: float) -> "BandedMatrix":
        return BandedMatrix(self.n, self.kl, self.ku, self.band * s)

    def _combine(self, other: "BandedMatrix", sign: float) -> "BandedMatrix":
        if other.n != self.n:
            raise DimensionMismatchError(
                f"cannot combine {self.n}x{self.n} and {other.n}x{other.n}"
            )
        kl, ku = max(self.kl, other.kl), max(self.ku, other.ku)
        a, b = self.widened(kl, ku), other.widened(kl, ku)
        return BandedMatrix(self.n, kl, ku, a.band + sign * b.band)

    def __add__(self, other: "BandedMatrix") -> "BandedMatrix":
        return self._combine(other, 1.0)

    def __sub__(self, other: "BandedMatrix") -> "BandedMatrix":
        return self._combine(other, -1.0)


@dataclass(frozen=True, eq=False)
class BandedFactorization:
    """Row-pivoted LU factors of a banded matrix; read-only after creation."""

    n: int
    kl: int
    ku: int
    ab: NDArray[np.float64]
    ipiv: NDArray[np.int64]

    def solve(self, rhs: ArrayLike) -> NDArray[np.float64]:
        b = np.ascontiguousarray(rhs, dtype=np.float64)
        if b.shape != (self.n,):
            raise DimensionMismatchError(f"rhs of shape {b.shape} for system of size {self.n}")
        return _kernels.band_solve(self.ab, self.ipiv, self.kl, self.ku, b)

    def solve_many(self, rhs: ArrayLike) -> NDArray[np.float64]:
        """Solve for every column of an ``(n, k)`` right-hand side."""
        B = np.asarray(rhs, dtype=np.float64)
        if B.ndim != 2 or B.shape[0] != self.n:
            raise DimensionMismatchError(f"rhs of shape {B.shape} for system of size {self.n}")
        out = np.empty_like(B)
        for k in range(B.shape[1]):
            out[:, k] = self.solve(B[:, k])
        return out


def banded_factor(M: BandedMatrix) -> BandedFactorization:
    """
    LU-factor a banded matrix with partial pivoting.

    Args:
        M: Square banded matrix

    Returns:
        Factorization reusable for any number of right-hand sides

    Raises:
        SingularMatrixError: If a pivot is below 1e-14 * ||M||_inf
    """
    tol = PIVOT_TOLERANCE * M.norm_inf()
    ab, ipiv, status = _kernels.band_factor(M.band, M.kl, M.ku, tol)
    if status != 0:
        raise SingularMatrixError(
            f"matrix is singular to working precision (pivot {status} of {M.n})",
            pivot_index=status - 1,
        )
    ab.setflags(write=False)
    ipiv.setflags(write=False)
    logger.debug(f"Factored banded matrix n={M.n} kl={M.kl} ku={M.ku}")
    return BandedFactorization(M.n, M.kl, M.ku, ab, ipiv)
