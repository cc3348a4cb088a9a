"""
Compact-difference matrices and the block operators of the semi-discrete system.

With phi = u_t and psi = u_xx the beam equation becomes

    rho A Phi_t = -c A Phi + EI B Psi + F1
        A Psi_t = -B Phi + F2

i.e. ``Acal U_t = Bcal U + F`` with U = (Phi, Psi). The block operators are
stored as banded matrices over the interleaved unknowns
(phi_1, psi_1, phi_2, psi_2, ...), where both have bandwidth 3.
"""

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from linalg import BandedMatrix, TridiagMatrix
from schemas.models import BeamProblem, Grid

BLOCK_BANDWIDTH = 3


def build_A(n: int) -> TridiagMatrix:
    """Compact weighting matrix diag_n(1/12, 5/6, 1/12)."""
    return TridiagMatrix.toeplitz(n, 1.0 / 12.0, 5.0 / 6.0, 1.0 / 12.0)


def build_B(n: int, h: float) -> TridiagMatrix:
    """Negative second-difference matrix (1/h^2) diag_n(-1, 2, -1)."""
    if h <= 0:
        raise ValueError(f"mesh width must be positive, got {h}")
    s = 1.0 / (h * h)
    return TridiagMatrix.toeplitz(n, -s, 2.0 * s, -s)


def interleave(phi: ArrayLike, psi: ArrayLike) -> NDArray[np.float64]:
    """(phi, psi) -> (phi_1, psi_1, phi_2, psi_2, ...)."""
    a = np.asarray(phi, dtype=np.float64)
    b = np.asarray(psi, dtype=np.float64)
    if a.shape != b.shape:
        raise ValueError(f"phi and psi shapes differ: {a.shape} vs {b.shape}")
    v = np.empty(2 * a.shape[0])
    v[0::2] = a
    v[1::2] = b
    return v


def deinterleave(v: ArrayLike) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Inverse of :func:`interleave`."""
    w = np.asarray(v, dtype=np.float64)
    if w.ndim != 1 or w.shape[0] % 2:
        raise ValueError(f"expected a vector of even length, got shape {w.shape}")
    return w[0::2].copy(), w[1::2].copy()


def stacked_permutation(m: int) -> NDArray[np.intp]:
    """Interleaved positions of the stacked unknowns (Phi then Psi)."""
    return np.concatenate((2 * np.arange(m), 2 * np.arange(m) + 1))


def _block_band(m: int, blocks: dict[tuple[int, int], TridiagMatrix]) -> BandedMatrix:
    """Pack a 2x2 block matrix with tridiagonal blocks into interleaved band form."""
    ku = BLOCK_BANDWIDTH
    band = np.zeros((2 * ku + 1, 2 * m))
    for (r, c), T in blocks.items():
        for d, values in ((0, T.diag), (1, T.lower[1:]), (-1, T.upper[:-1])):
            # block entry (i, j) with i - j = d sits at global (2i + r, 2j + c)
            j = np.arange(max(0, -d), min(m, m - d))
            if j.size == 0:
                continue
            gi = 2 * (j + d) + r
            gj = 2 * j + c
            band[ku + gi - gj, gj] += values
    return BandedMatrix(2 * m, ku, ku, band)


@dataclass(frozen=True, eq=False)
class BlockOperators:
    """``Acal = diag(rho A, A)`` and ``Bcal = [[-c A, EI B], [-B, 0]]``, interleaved."""

    Acal: BandedMatrix
    Bcal: BandedMatrix
    A: TridiagMatrix
    B: TridiagMatrix

    @property
    def m(self) -> int:
        return self.A.n

    def stacked_dense(self) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
        """Dense ``(Acal, Bcal)`` in the stacked (Phi, Psi) ordering."""
        p = stacked_permutation(self.m)
        idx = np.ix_(p, p)
        return self.Acal.to_dense()[idx], self.Bcal.to_dense()[idx]


def assemble_block(problem: BeamProblem, grid: Grid) -> BlockOperators:
    """
    Build the block operators for a problem on a grid.

    Args:
        problem: Coefficients EI, rho, c
        grid: Mesh; the operators act on the nx - 1 interior nodes

    Returns:
        Block operators in interleaved banded storage
    """
    m = grid.n_interior
    A = build_A(m)
    B = build_B(m, grid.h)
    Acal = _block_band(m, {(0, 0): A.scaled(problem.rho), (1, 1): A})
    Bcal = _block_band(
        m,
        {
            (0, 0): A.scaled(-problem.c),
            (0, 1): B.scaled(problem.EI),
            (1, 0): B.scaled(-1.0),
        },
    )
    return BlockOperators(Acal=Acal, Bcal=Bcal, A=A, B=B)
