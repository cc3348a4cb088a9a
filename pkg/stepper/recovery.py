"""Displacement recovery from the moment variable."""

import numpy as np
from numpy.typing import ArrayLike, NDArray

from discretize.operators import build_A, build_B
from exprcalc import evaluate
from linalg import tridiag_solve
from schemas.models import BeamProblem, Grid


def recover_u(psi: ArrayLike, t: float, problem: BeamProblem, grid: Grid) -> NDArray[np.float64]:
    """
    Recover u from psi = u_xx through the compact relation.

    Solves ``B u = -(A psi + psi_0/12 e_1 + psi_N/12 e_m) + (u_0 e_1 + u_N e_m)/h^2``
    with psi_0 = mu2(t), psi_N = mu3(t), u_0 = mu0(t), u_N = mu1(t).

    Args:
        psi: Moment variable at the nx - 1 interior nodes
        t: Time of ``psi``
        problem: Supplies the boundary traces
        grid: Mesh

    Returns:
        u at all nx + 1 nodes, boundary values imposed exactly
    """
    values = np.asarray(psi, dtype=np.float64)
    m = grid.n_interior
    if values.shape != (m,):
        raise ValueError(f"psi must have length {m}, got shape {values.shape}")
    L = grid.length
    h2 = grid.h**2

    u0 = evaluate(problem.mu0, 0.0, t)
    uN = evaluate(problem.mu1, L, t)
    psi0 = evaluate(problem.mu2, 0.0, t)
    psiN = evaluate(problem.mu3, L, t)

    rhs = -build_A(m).matvec(values)
    rhs[0] += -psi0 / 12.0 + u0 / h2
    rhs[-1] += -psiN / 12.0 + uN / h2

    u = np.empty(grid.nx + 1)
    u[1:-1] = tridiag_solve(build_B(m, grid.h), rhs)
    u[0] = u0
    u[-1] = uN
    return u
