"""
Domain models for the beam solver.

This module defines the problem statement (coefficients plus initial,
boundary and forcing data as expression trees), the space-time grid and the
discrete state carried by the time stepper.
"""

import logging
import math
from dataclasses import dataclass
from typing import Literal

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, model_validator

from exprcalc import Expr, diff, evaluate, manufacture_forcing, parse, substitute

logger = logging.getLogger(__name__)

CORNER_TOLERANCE = 1e-10


class BeamProblem(BaseModel):
    """
    Damped Euler-Bernoulli beam on [0, L] x [0, T], simply supported.

    Boundary traces ``mu0``/``mu1`` (displacement) and ``mu2``/``mu3``
    (second spatial derivative) are evaluated at x = 0 and x = L respectively.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    EI: float = Field(..., gt=0, description="Flexural rigidity")
    rho: float = Field(..., gt=0, description="Linear density")
    c: float = Field(..., ge=0, description="Damping coefficient")
    length: float = Field(default=1.0, gt=0, description="Beam length L")
    final_time: float = Field(default=1.0, gt=0, description="Simulated time T")
    u_exact: Expr | None = Field(default=None, description="Exact solution, if known")
    xi1: Expr = Field(..., description="Initial displacement u(x, 0)")
    xi2: Expr = Field(..., description="Initial velocity u_t(x, 0)")
    mu0: Expr = Field(..., description="Displacement at x = 0")
    mu1: Expr = Field(..., description="Displacement at x = L")
    mu2: Expr = Field(..., description="Moment variable u_xx at x = 0")
    mu3: Expr = Field(..., description="Moment variable u_xx at x = L")
    f: Expr = Field(..., description="Distributed load f(x, t)")

    @model_validator(mode="after")
    def check_corners(self) -> "BeamProblem":
        """Initial displacement must agree with the boundary displacement at t = 0."""
        L = self.length
        left = evaluate(self.xi1, 0.0, 0.0) - evaluate(self.mu0, 0.0, 0.0)
        right = evaluate(self.xi1, L, 0.0) - evaluate(self.mu1, L, 0.0)
        if abs(left) > CORNER_TOLERANCE or abs(right) > CORNER_TOLERANCE:
            raise ValueError(
                f"incompatible corner data: xi1(0) - mu0(0) = {left:.3e}, "
                f"xi1(L) - mu1(0) = {right:.3e}"
            )
        if self.c == 0:
            logger.warning("Damping c = 0: running undamped, energy decay is no longer guaranteed")
        return self

    @classmethod
    def from_exact(
        cls,
        u: Expr | str,
        EI: float,
        rho: float,
        c: float,
        length: float = 1.0,
        final_time: float = 1.0,
    ) -> "BeamProblem":
        """
        Manufacture a complete problem from an exact solution.

        Initial data, boundary traces and the forcing are all derived
        symbolically from ``u``.
        """
        exact = parse(u) if isinstance(u, str) else u
        u_t = diff(exact, "t")
        u_xx = diff(exact, "x", order=2)
        return cls(
            EI=EI,
            rho=rho,
            c=c,
            length=length,
            final_time=final_time,
            u_exact=exact,
            xi1=substitute(exact, "t", 0.0),
            xi2=substitute(u_t, "t", 0.0),
            mu0=substitute(exact, "x", 0.0),
            mu1=substitute(exact, "x", length),
            mu2=substitute(u_xx, "x", 0.0),
            mu3=substitute(u_xx, "x", length),
            f=manufacture_forcing(exact, EI, rho, c),
        )

    def scaled(self, s: float) -> "BeamProblem":
        """Same coefficients with every data expression multiplied by ``s``."""
        data = {
            name: getattr(self, name) * s
            for name in ("xi1", "xi2", "mu0", "mu1", "mu2", "mu3", "f")
        }
        exact = self.u_exact * s if self.u_exact is not None else None
        return self.model_copy(update={**data, "u_exact": exact})


StepRule = Literal["h2"] | float


class Grid(BaseModel):
    """Uniform space-time mesh with ``nx`` intervals and ``nt`` steps."""

    model_config = ConfigDict(frozen=True)

    nx: int = Field(..., ge=3, description="Number of spatial intervals")
    nt: int = Field(..., ge=1, description="Number of time steps")
    length: float = Field(default=1.0, gt=0)
    final_time: float = Field(default=1.0, gt=0)

    @property
    def h(self) -> float:
        return self.length / self.nx

    @property
    def dt(self) -> float:
        return self.final_time / self.nt

    @property
    def n_interior(self) -> int:
        return self.nx - 1

    @property
    def nodes(self) -> NDArray[np.float64]:
        """All nx + 1 node coordinates, boundaries included."""
        return np.arange(self.nx + 1) * self.h

    @property
    def interior(self) -> NDArray[np.float64]:
        return self.nodes[1:-1]

    def time(self, n: int) -> float:
        return self.final_time if n == self.nt else n * self.dt

    @classmethod
    def from_problem(
        cls,
        problem: BeamProblem,
        nx: int,
        dt: StepRule = "h2",
        final_time: float | None = None,
    ) -> "Grid":
        """
        Build the mesh for a problem.

        Args:
            problem: Problem supplying L and (by default) T
            nx: Number of spatial intervals
            dt: ``"h2"`` for the dt = h^2 coupling, or an explicit step
            final_time: Overrides the problem's T

        Returns:
            Grid whose step count is the nearest integer to T / dt
        """
        T = problem.final_time if final_time is None else final_time
        step = (problem.length / nx) ** 2 if dt == "h2" else float(dt)
        if step <= 0:
            raise ValueError(f"time step must be positive, got {step}")
        nt = max(1, round(T / step))
        if not math.isclose(nt * step, T, rel_tol=1e-9):
            logger.warning(f"dt={step:g} does not divide T={T:g}; using dt={T / nt:g}")
        return cls(nx=nx, nt=nt, length=problem.length, final_time=T)


@dataclass(frozen=True, eq=False)
class StateVector:
    """Velocity ``phi`` and moment variable ``psi`` at the interior nodes."""

    phi: NDArray[np.float64]
    psi: NDArray[np.float64]
    time_index: int = 0

    def __post_init__(self) -> None:
        if self.phi.shape != self.psi.shape or self.phi.ndim != 1:
            raise ValueError(f"phi/psi shapes differ: {self.phi.shape} vs {self.psi.shape}")
        if not (np.all(np.isfinite(self.phi)) and np.all(np.isfinite(self.psi))):
            raise FloatingPointError(f"non-finite state at time index {self.time_index}")

    @property
    def size(self) -> int:
        return int(self.phi.shape[0])

    @classmethod
    def zeros(cls, m: int, time_index: int = 0) -> "StateVector":
        return cls(np.zeros(m), np.zeros(m), time_index)

    def stacked(self) -> NDArray[np.float64]:
        """(Phi, Psi) concatenated, the layout of the block equations."""
        return np.concatenate((self.phi, self.psi))

    def norm(self) -> float:
        return float(np.linalg.norm(self.stacked()))
