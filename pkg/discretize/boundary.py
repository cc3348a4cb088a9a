"""
Boundary and load vector F(t) of the semi-discrete system.

The first block row carries the compact-weighted load plus the boundary
terms alpha (x = 0) and beta (x = L); the second block row carries only
alpha' and beta'. With phi_0 = mu0', phi_0' = mu0'', psi_0 = mu2 and
psi_0' = mu2' (mirrored at x = L with mu1, mu3):

    alpha  = -EI psi_0 / h^2 - rho phi_0' / 12 - c phi_0 / 12
    alpha' = phi_0 / h^2 - psi_0' / 12
"""

import numpy as np
from numpy.typing import NDArray

from discretize.operators import interleave
from exprcalc import Expr, diff, evaluate, sample
from schemas.models import BeamProblem, Grid


class BoundaryForcing:
    """F(t) for one (problem, grid) pair, with the boundary traces differentiated once."""

    def __init__(self, problem: BeamProblem, grid: Grid):
        self.problem = problem
        self.grid = grid
        self._nodes = grid.nodes
        L = grid.length
        # (expression, x at which it is evaluated)
        self._phi0 = (diff(problem.mu0, "t"), 0.0)
        self._dphi0 = (diff(problem.mu0, "t", order=2), 0.0)
        self._psi0 = (problem.mu2, 0.0)
        self._dpsi0 = (diff(problem.mu2, "t"), 0.0)
        self._phiN = (diff(problem.mu1, "t"), L)
        self._dphiN = (diff(problem.mu1, "t", order=2), L)
        self._psiN = (problem.mu3, L)
        self._dpsiN = (diff(problem.mu3, "t"), L)

    @staticmethod
    def _trace(term: tuple[Expr, float], t: float) -> float:
        expr, x = term
        return evaluate(expr, x, t)

    def boundary_terms(self, t: float) -> tuple[float, float, float, float]:
        """(alpha, beta, alpha', beta') at time t."""
        p = self.problem
        h2 = self.grid.h**2
        phi0, dphi0 = self._trace(self._phi0, t), self._trace(self._dphi0, t)
        psi0, dpsi0 = self._trace(self._psi0, t), self._trace(self._dpsi0, t)
        phiN, dphiN = self._trace(self._phiN, t), self._trace(self._dphiN, t)
        psiN, dpsiN = self._trace(self._psiN, t), self._trace(self._dpsiN, t)

        alpha = -p.EI * psi0 / h2 - p.rho * dphi0 / 12.0 - p.c * phi0 / 12.0
        beta = -p.EI * psiN / h2 - p.rho * dphiN / 12.0 - p.c * phiN / 12.0
        alpha_p = phi0 / h2 - dpsi0 / 12.0
        beta_p = phiN / h2 - dpsiN / 12.0
        return alpha, beta, alpha_p, beta_p

    def blocks(self, t: float) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
        """(F1, F2), each of length nx - 1."""
        f = sample(self.problem.f, self._nodes, t)
        # compact weights reach the boundary samples f_0 and f_N
        F1 = f[:-2] / 12.0 + 5.0 / 6.0 * f[1:-1] + f[2:] / 12.0
        F2 = np.zeros_like(F1)
        alpha, beta, alpha_p, beta_p = self.boundary_terms(t)
        F1[0] += alpha
        F1[-1] += beta
        F2[0] += alpha_p
        F2[-1] += beta_p
        return F1, F2

    def stacked(self, t: float) -> NDArray[np.float64]:
        F1, F2 = self.blocks(t)
        return np.concatenate((F1, F2))

    def interleaved(self, t: float) -> NDArray[np.float64]:
        return interleave(*self.blocks(t))


def boundary_force(problem: BeamProblem, grid: Grid, t: float) -> NDArray[np.float64]:
    """
    F(t) in the stacked (F1, F2) layout, length 2(nx - 1).

    Args:
        problem: Problem supplying the load and boundary traces
        grid: Mesh
        t: Time

    Returns:
        Load/boundary vector
    """
    return BoundaryForcing(problem, grid).stacked(t)
