"""
Spectral stability checks of the Crank-Nicolson scheme.

The amplification matrix is Q = Q1^{-1} Q2 with Q1 = Acal - dt/2 Bcal and
Q2 = Acal + dt/2 Bcal. Its eigenvalues are the Cayley images
(1 + dt z/2) / (1 - dt z/2) of the eigenvalues z of C = Acal^{-1} Bcal, so
rho(Q) <= 1 exactly when C has no eigenvalue in the open right half-plane.
"""

import logging
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from discretize import assemble_block
from linalg import Spectrum, dense_solve, eigenvalues
from schemas.models import BeamProblem, Grid

logger = logging.getLogger(__name__)

RADIUS_TOLERANCE = 1e-10
REAL_PART_TOLERANCE = 1e-10

# Block operators of the 4x4 counterexample: Acal = blockdiag(A2, A2) with EI = rho = c = 1.
_REMARK_A2 = np.array([[5.0 / 6.0, 1.0 / 12.0], [1.0 / 12.0, 5.0 / 6.0]])
REMARK_ACAL = np.block([[_REMARK_A2, np.zeros((2, 2))], [np.zeros((2, 2)), _REMARK_A2]])
REMARK_BCAL = np.array(
    [
        [-3.0, -4.0, 3.0, -2.0],
        [5.0, 0.0, 0.0, 2.0],
        [4.0, -1.0, -1.0, 5.0],
        [-2.0, 5.0, -4.0, -2.0],
    ]
)


@dataclass(frozen=True)
class StabilityReport:
    """Spectrum summary of one (operators, dt) configuration."""

    nx: int
    dt: float
    max_real: float
    spectral_radius: float
    direct_radius: float
    converged: bool
    EI: float | None = None
    rho: float | None = None
    c: float | None = None
    spectral_scale: float = 1.0

    @property
    def passed(self) -> bool:
        return self.converged and self.spectral_radius <= 1.0 + RADIUS_TOLERANCE

    @property
    def left_half_plane(self) -> bool:
        """No eigenvalue of C to the right of the (scaled) imaginary-axis tolerance."""
        return self.max_real <= REAL_PART_TOLERANCE * max(1.0, self.spectral_scale)


def cayley_radius(eigs: ArrayLike, dt: float) -> float:
    """rho(Q) from the eigenvalues of C via the Cayley map."""
    z = np.asarray(eigs, dtype=np.complex128)
    return float(np.max(np.abs((1.0 + 0.5 * dt * z) / (1.0 - 0.5 * dt * z))))


def operator_stability(
    Acal: ArrayLike, Bcal: ArrayLike, dt: float, **params: float
) -> StabilityReport:
    """
    Stability report for arbitrary dense block operators.

    Args:
        Acal: Mass-side operator (nonsingular)
        Bcal: Stiffness-side operator
        dt: Time step
        **params: Coefficients echoed into the report (EI, rho, c)

    Returns:
        Report with max Re eig(C), rho(Q) from the Cayley map and from the
        directly formed Q
    """
    a = np.asarray(Acal, dtype=np.float64)
    b = np.asarray(Bcal, dtype=np.float64)
    C = dense_solve(a, b)
    c_spectrum = eigenvalues(C)

    Q = dense_solve(a - 0.5 * dt * b, a + 0.5 * dt * b)
    q_spectrum = eigenvalues(Q)

    converged = c_spectrum.converged and q_spectrum.converged
    if converged:
        radius = cayley_radius(c_spectrum.eigenvalues, dt)
        direct = float(np.max(np.abs(q_spectrum.eigenvalues)))
        scale = float(np.max(np.abs(c_spectrum.eigenvalues)))
    else:
        logger.warning(f"Eigensolver did not converge for dt={dt:g}; marking report as failed")
        radius = direct = scale = float("nan")

    report = StabilityReport(
        nx=a.shape[0] // 2 + 1,
        dt=dt,
        max_real=c_spectrum.max_real if c_spectrum.converged else float("nan"),
        spectral_radius=radius,
        direct_radius=direct,
        converged=converged,
        EI=params.get("EI"),
        rho=params.get("rho"),
        c=params.get("c"),
        spectral_scale=scale,
    )
    logger.debug(f"Stability dt={dt:g}: max Re={report.max_real:.3e}, rho(Q)={radius:.15f}")
    return report


def stability_check(problem: BeamProblem, grid: Grid) -> StabilityReport:
    """
    Spectrum-based von Neumann check of the scheme on a grid.

    Args:
        problem: Coefficients EI, rho, c (c >= 0)
        grid: Mesh and time step

    Returns:
        Report; ``passed`` iff rho(Q) <= 1 + 1e-10 and the eigensolver converged
    """
    Acal, Bcal = assemble_block(problem, grid).stacked_dense()
    report = operator_stability(Acal, Bcal, grid.dt, EI=problem.EI, rho=problem.rho, c=problem.c)
    if not report.passed:
        logger.warning(
            f"Stability check failed: nx={grid.nx} dt={grid.dt:g} rho(Q)={report.spectral_radius}"
        )
    return report


@dataclass(frozen=True)
class CounterexampleReport:
    """Spectra of Bcal and of Acal^{-1} Bcal for the 4x4 counterexample."""

    b_spectrum: Spectrum
    c_spectrum: Spectrum

    @property
    def b_max_real(self) -> float:
        return self.b_spectrum.max_real

    @property
    def c_max_real(self) -> float:
        return self.c_spectrum.max_real

    @property
    def flagged(self) -> bool:
        """Bcal sits in the left half-plane while Acal^{-1} Bcal does not."""
        return self.b_max_real <= 0.0 < self.c_max_real


def remark_counterexample() -> CounterexampleReport:
    """
    Show that Re eig(Bcal) <= 0 does not imply Re eig(Acal^{-1} Bcal) <= 0.

    Uses the fixed 4x4 operators with EI = rho = c = 1.
    """
    report = CounterexampleReport(
        b_spectrum=eigenvalues(REMARK_BCAL),
        c_spectrum=eigenvalues(dense_solve(REMARK_ACAL, REMARK_BCAL)),
    )
    if report.flagged:
        logger.info(
            f"Counterexample: max Re eig(B)={report.b_max_real:.4f}, "
            f"max Re eig(A^-1 B)={report.c_max_real:.4f}"
        )
    return report


def modal_spectrum(problem: BeamProblem, grid: Grid) -> NDArray[np.complex128]:
    """
    Closed-form eigenvalues of Acal^{-1} Bcal.

    A and B share the sine eigenvectors, so each mode k contributes the two
    roots of eta^2 + (c/rho) eta + (EI/rho) kappa_k^2 = 0 with
    kappa_k = b_k / a_k, b_k = (2 - 2 cos theta_k) / h^2,
    a_k = 5/6 + cos(theta_k) / 6 and theta_k = k pi / nx.

    Returns:
        The 2(nx - 1) eigenvalues sorted by (real, imaginary) part
    """
    k = np.arange(1, grid.nx)
    theta = k * np.pi / grid.nx
    kappa = ((2.0 - 2.0 * np.cos(theta)) / grid.h**2) / (5.0 / 6.0 + np.cos(theta) / 6.0)
    damping = problem.c / problem.rho
    disc = np.sqrt((damping**2 - 4.0 * (problem.EI / problem.rho) * kappa**2).astype(complex))
    roots = np.concatenate(((-damping + disc) / 2.0, (-damping - disc) / 2.0))
    order = np.lexsort((roots.imag, roots.real))
    return roots[order]
