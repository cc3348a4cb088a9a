"""
Crank-Nicolson time stepping of the semi-discrete system.

Each step solves

    (Acal - dt/2 Bcal) U^{n+1} = (Acal + dt/2 Bcal) U^n + dt/2 (F^{n+1} + F^n)

against a band LU factorization computed once per (problem, grid).
"""

import logging
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from discretize import (
    BoundaryForcing,
    assemble_block,
    build_A,
    deinterleave,
    initial_state,
    interleave,
)
from linalg import BandedFactorization, BandedMatrix, banded_factor
from schemas.config import get_settings
from schemas.models import BeamProblem, Grid, StateVector
from stepper.recovery import recover_u

logger = logging.getLogger(__name__)

STEP_RESIDUAL_TOLERANCE = 1e-11


class StepResidualError(ArithmeticError):
    """Raised when a verified step misses its linear relation."""


class CnStepper:
    """Factored Crank-Nicolson map for one problem on one grid; immutable once built."""

    def __init__(self, problem: BeamProblem, grid: Grid):
        self.problem = problem
        self.grid = grid
        ops = assemble_block(problem, grid)
        half = 0.5 * grid.dt
        self.operators = ops
        self.left: BandedMatrix = ops.Acal - ops.Bcal.scaled(half)
        self.right: BandedMatrix = ops.Acal + ops.Bcal.scaled(half)
        self.factorization: BandedFactorization = banded_factor(self.left)
        self.forcing = BoundaryForcing(problem, grid)
        logger.debug(f"Factored CN system: nx={grid.nx}, dt={grid.dt:.3e}")

    def rhs(
        self, U: NDArray[np.float64], F_now: NDArray[np.float64], F_next: NDArray[np.float64]
    ) -> NDArray[np.float64]:
        """Right-hand side for interleaved U and forces."""
        return self.right.matvec(U) + (0.5 * self.grid.dt) * (F_now + F_next)

    def advance(
        self, U: NDArray[np.float64], F_now: NDArray[np.float64], F_next: NDArray[np.float64]
    ) -> NDArray[np.float64]:
        """One step on interleaved vectors with precomputed forces."""
        return self.factorization.solve(self.rhs(U, F_now, F_next))

    def step(self, U: StateVector, t: float) -> StateVector:
        """Advance ``U`` from time ``t`` to ``t + dt``."""
        v = interleave(U.phi, U.psi)
        F_now = self.forcing.interleaved(t)
        F_next = self.forcing.interleaved(t + self.grid.dt)
        phi, psi = deinterleave(self.advance(v, F_now, F_next))
        return StateVector(phi, psi, U.time_index + 1)

    def residual(self, U_next: StateVector, U: StateVector, t: float) -> float:
        """
        Relative residual of the step relation.

        Returns:
            ``||left U_next - rhs||_inf / ||rhs||_inf`` (absolute when rhs is zero)
        """
        F_now = self.forcing.interleaved(t)
        F_next = self.forcing.interleaved(t + self.grid.dt)
        return self.relation_residual(
            interleave(U_next.phi, U_next.psi), interleave(U.phi, U.psi), F_now, F_next
        )

    def relation_residual(
        self,
        v_next: NDArray[np.float64],
        v: NDArray[np.float64],
        F_now: NDArray[np.float64],
        F_next: NDArray[np.float64],
    ) -> float:
        b = self.rhs(v, F_now, F_next)
        defect = float(np.max(np.abs(self.left.matvec(v_next) - b)))
        scale = float(np.max(np.abs(b)))
        return defect / scale if scale > 0 else defect


def cn_step(s: CnStepper, U: StateVector, t: float) -> StateVector:
    """Advance one Crank-Nicolson step; ``t`` is the time of ``U``."""
    return s.step(U, t)


def energy(U: StateVector, problem: BeamProblem) -> float:
    """
    Discrete energy rho Phi^T A Phi + EI Psi^T A Psi.

    Conserved exactly by the unforced, undamped CN map and non-increasing
    when c > 0.
    """
    A = build_A(U.size)
    return float(
        problem.rho * U.phi @ A.matvec(U.phi) + problem.EI * U.psi @ A.matvec(U.psi)
    )


@dataclass
class Trajectory:
    """States and recovered displacements at the recorded time indices."""

    grid: Grid
    time_indices: list[int] = field(default_factory=list)
    states: list[StateVector] = field(default_factory=list)
    displacements: list[NDArray[np.float64]] = field(default_factory=list)

    @property
    def times(self) -> list[float]:
        return [self.grid.time(n) for n in self.time_indices]

    @property
    def final_state(self) -> StateVector:
        return self.states[-1]

    @property
    def final_displacement(self) -> NDArray[np.float64]:
        return self.displacements[-1]

    def record(self, U: StateVector, u: NDArray[np.float64]) -> None:
        self.time_indices.append(U.time_index)
        self.states.append(U)
        self.displacements.append(u)


def solve(
    problem: BeamProblem,
    grid: Grid,
    stride: int | None = None,
    verify: bool | None = None,
) -> Trajectory:
    """
    Integrate from U^0 to t = T and recover the displacement.

    Args:
        problem: Beam problem
        grid: Mesh; ``grid.final_time`` is the end time
        stride: Also record every ``stride`` steps (the final time is always recorded)
        verify: Check each step's residual; defaults to ``AppSettings.verify_steps``

    Returns:
        Trajectory of recorded states

    Raises:
        StepResidualError: If verification is on and a step misses the tolerance
    """
    if verify is None:
        verify = get_settings().verify_steps
    stepper = CnStepper(problem, grid)
    trajectory = Trajectory(grid)

    U0 = initial_state(problem, grid)
    if stride:
        trajectory.record(U0, recover_u(U0.psi, 0.0, problem, grid))

    v = interleave(U0.phi, U0.psi)
    F_now = stepper.forcing.interleaved(0.0)
    for n in range(grid.nt):
        t_next = grid.time(n + 1)
        F_next = stepper.forcing.interleaved(t_next)
        v_next = stepper.advance(v, F_now, F_next)
        if verify:
            res = stepper.relation_residual(v_next, v, F_now, F_next)
            if res > STEP_RESIDUAL_TOLERANCE:
                raise StepResidualError(f"step {n + 1}: residual {res:.3e} exceeds tolerance")
        v, F_now = v_next, F_next

        last = n + 1 == grid.nt
        if last or (stride and (n + 1) % stride == 0):
            phi, psi = deinterleave(v)
            U = StateVector(phi, psi, n + 1)
            trajectory.record(U, recover_u(psi, t_next, problem, grid))

    logger.info(f"Solved nx={grid.nx}, nt={grid.nt} to t={grid.final_time:g}")
    return trajectory
