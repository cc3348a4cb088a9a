"""Initial state U^0 = (Phi^0, Psi^0)."""

import logging

import numpy as np
from numpy.typing import NDArray

from discretize.operators import build_A
from exprcalc import diff, evaluate, sample
from linalg import tridiag_solve
from schemas.models import BeamProblem, Grid, StateVector

logger = logging.getLogger(__name__)


def compact_moment(problem: BeamProblem, grid: Grid) -> NDArray[np.float64]:
    """
    Psi^0 from the compact relation applied to the initial displacement.

    Solves A psi = delta^2 xi1 / h^2 with the boundary moments mu2(0), mu3(0)
    moved to the right-hand side; fourth-order accurate without xi1'' in
    closed form.
    """
    x = grid.nodes
    h = grid.h
    xi = sample(problem.xi1, x, 0.0)
    rhs = (xi[2:] - 2.0 * xi[1:-1] + xi[:-2]) / (h * h)
    rhs[0] -= evaluate(problem.mu2, 0.0, 0.0) / 12.0
    rhs[-1] -= evaluate(problem.mu3, grid.length, 0.0) / 12.0
    return tridiag_solve(build_A(grid.n_interior), rhs)


def initial_state(problem: BeamProblem, grid: Grid) -> StateVector:
    """
    Sample the initial velocity and moment.

    Psi^0 is u_xx(x, 0) sampled from the exact solution when the problem has
    one; otherwise it comes from ``compact_moment``.
    """
    phi = sample(problem.xi2, grid.interior, 0.0)
    if problem.u_exact is not None:
        psi = sample(diff(problem.u_exact, "x", order=2), grid.interior, 0.0)
    else:
        psi = compact_moment(problem, grid)

    logger.debug(f"Initial state on nx={grid.nx}: |phi|={np.abs(phi).max():.3e}")
    return StateVector(phi, psi, time_index=0)
