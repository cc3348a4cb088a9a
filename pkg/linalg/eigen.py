"""
Eigenvalues of real nonsymmetric matrices.

Pipeline: diagonal balancing, Householder reduction to upper Hessenberg
form, then Francis implicit double-shift QR (compiled in ``_kernels.hqr``).
"""

import logging
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from linalg import _kernels
from linalg.errors import DimensionMismatchError

logger = logging.getLogger(__name__)

_RADIX = 2.0
ITERATIONS_PER_EIGENVALUE = 30


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues sorted by (real, imaginary) part."""

    eigenvalues: NDArray[np.complex128]
    iterations: int
    converged: bool

    def __len__(self) -> int:
        return int(self.eigenvalues.shape[0])

    @property
    def max_real(self) -> float:
        return float(np.max(self.eigenvalues.real))

    def pairs(self) -> list[tuple[float, float]]:
        """Eigenvalues as (re, im) tuples."""
        return [(float(z.real), float(z.imag)) for z in self.eigenvalues]


def balance(M: NDArray[np.float64]) -> NDArray[np.float64]:
    """
    Similarity-scale rows and columns by powers of two until their norms match.

    Returns a balanced copy; eigenvalues are unchanged and exactly preserved
    because the scale factors are powers of the radix.
    """
    a = np.array(M, dtype=np.float64)
    n = a.shape[0]
    sqrdx = _RADIX * _RADIX
    done = False
    while not done:
        done = True
        for i in range(n):
            c = float(np.abs(a[:, i]).sum() - abs(a[i, i]))
            r = float(np.abs(a[i, :]).sum() - abs(a[i, i]))
            if c == 0.0 or r == 0.0:
                continue
            g = r / _RADIX
            f = 1.0
            s = c + r
            while c < g:
                f *= _RADIX
                c *= sqrdx
            g = r * _RADIX
            while c > g:
                f /= _RADIX
                c /= sqrdx
            if (c + r) / f < 0.95 * s:
                done = False
                a[i, :] /= f
                a[:, i] *= f
    return a


def hessenberg(M: NDArray[np.float64]) -> NDArray[np.float64]:
    """Reduce to upper Hessenberg form with Householder reflections."""
    h = np.array(M, dtype=np.float64)
    n = h.shape[0]
    for k in range(n - 2):
        x = h[k + 1 :, k].copy()
        norm = float(np.linalg.norm(x))
        if norm == 0.0:
            continue
        alpha = -np.copysign(norm, x[0])
        v = x
        v[0] -= alpha
        v /= np.linalg.norm(v)
        h[k + 1 :, k:] -= 2.0 * np.outer(v, v @ h[k + 1 :, k:])
        h[:, k + 1 :] -= 2.0 * np.outer(h[:, k + 1 :] @ v, v)
        h[k + 2 :, k] = 0.0
    return h


def eigenvalues(M: ArrayLike) -> Spectrum:
    """
    Compute all eigenvalues of a real square matrix.

    Args:
        M: Real ``(n, n)`` matrix with finite entries

    Returns:
        Spectrum; ``converged`` is False when the iteration budget (30n QR
        sweeps) ran out, in which case the unresolved eigenvalues are NaN

    Raises:
        DimensionMismatchError: If ``M`` is not square
        ValueError: On non-finite entries
    """
    a = np.asarray(M, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise DimensionMismatchError(f"expected a non-empty square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    n = a.shape[0]

    h = hessenberg(balance(a))
    padded = np.zeros((n + 1, n + 1))
    padded[1:, 1:] = h
    wr, wi, iterations, converged = _kernels.hqr(
        padded, n, ITERATIONS_PER_EIGENVALUE * n
    )
    if not converged:
        logger.warning(f"QR iteration did not converge for n={n} after {iterations} sweeps")

    values = wr[1:] + 1j * wi[1:]
    order = np.lexsort((values.imag, values.real))
    return Spectrum(values[order], int(iterations), bool(converged))


def spectral_radius(s: Spectrum) -> float:
    """
    Largest eigenvalue modulus.

    Raises:
        ValueError: If the spectrum did not converge
    """
    if not s.converged:
        raise ValueError("spectral radius of an unconverged spectrum is undefined")
    return float(np.max(np.abs(s.eigenvalues)))


def gershgorin_discs(M: ArrayLike) -> list[tuple[float, float]]:
    """(centre, radius) of each row's Gershgorin disc."""
    a = np.asarray(M, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {a.shape}")
    centres = np.diag(a)
    radii = np.abs(a).sum(axis=1) - np.abs(centres)
    return [(float(c), float(r)) for c, r in zip(centres, radii, strict=True)]
