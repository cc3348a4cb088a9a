"""
Convergence tables against manufactured exact solutions.

Ladder entries are independent solves and run on a thread pool; the compiled
kernels release the GIL. Rows are always assembled in ladder order.
"""

import logging
import os
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from analysis.fitting import pairwise_order
from exprcalc import sample
from schemas.config import get_settings
from schemas.models import BeamProblem, Grid, StepRule
from stepper import solve

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConvergenceRow:
    mesh: int  # 1-based row number
    nx: int
    nt: int
    h: float
    dt: float
    error: float
    order: float | None


@dataclass
class ConvergenceReport:
    """L-infinity errors at ``t_eval`` with orders between consecutive rows."""

    t_eval: float
    kind: str = "space"  # "space": h ladder, "time": dt ladder at fixed h
    rows: list[ConvergenceRow] = field(default_factory=list)

    @property
    def orders(self) -> list[float]:
        return [r.order for r in self.rows if r.order is not None]

    @property
    def average_order(self) -> float | None:
        orders = self.orders
        return float(np.mean(orders)) if orders else None

    @property
    def monotone(self) -> bool:
        errors = [r.error for r in self.rows]
        return all(a > b for a, b in zip(errors, errors[1:], strict=False))


def _resolve_threads(threads: int | None) -> int:
    if threads is None:
        threads = get_settings().threads
    return threads or min(4, os.cpu_count() or 1)


def max_error(problem: BeamProblem, grid: Grid) -> float:
    """L-infinity displacement error at ``grid.final_time``."""
    if problem.u_exact is None:
        raise ValueError("convergence needs a problem with an exact solution")
    u = solve(problem, grid).final_displacement
    exact = sample(problem.u_exact, grid.nodes, grid.final_time)
    error = float(np.max(np.abs(u - exact)))
    logger.info(f"nx={grid.nx} nt={grid.nt}: error {error:.6e}")
    return error


def _table(
    grids: list[Grid], t_eval: float, kind: str, problem: BeamProblem, threads: int | None
) -> ConvergenceReport:
    workers = min(_resolve_threads(threads), len(grids))
    with ThreadPoolExecutor(max_workers=workers) as executor:
        errors = list(executor.map(lambda g: max_error(problem, g), grids))

    report = ConvergenceReport(t_eval=t_eval, kind=kind)
    for i, (grid, error) in enumerate(zip(grids, errors, strict=True)):
        order = None
        if i > 0:
            prev = grids[i - 1]
            step, prev_step = (grid.h, prev.h) if kind == "space" else (grid.dt, prev.dt)
            order = pairwise_order(prev_step, step, errors[i - 1], error)
        report.rows.append(
            ConvergenceRow(i + 1, grid.nx, grid.nt, grid.h, grid.dt, error, order)
        )
    if not report.monotone:
        logger.warning("Errors are not monotonically decreasing along the ladder")
    return report


def convergence_table(
    problem: BeamProblem,
    ladder: Sequence[int],
    t_eval: float | None = None,
    dt: StepRule = "h2",
    threads: int | None = None,
) -> ConvergenceReport:
    """
    Errors and orders over a spatial ladder.

    Args:
        problem: Problem with an exact solution
        ladder: Nx values, typically doubling
        t_eval: Evaluation time; defaults to the problem's final time
        dt: Time-step rule, ``"h2"`` for dt = h^2
        threads: Worker threads; defaults to ``AppSettings.threads``

    Returns:
        Report in ladder order; order_i = log(e_{i-1}/e_i) / log(h_{i-1}/h_i)
    """
    if not ladder:
        raise ValueError("ladder must not be empty")
    T = problem.final_time if t_eval is None else t_eval
    grids = [Grid.from_problem(problem, nx, dt, final_time=T) for nx in ladder]
    return _table(grids, T, "space", problem, threads)


def temporal_convergence_table(
    problem: BeamProblem,
    nx: int,
    nt_ladder: Sequence[int],
    t_eval: float | None = None,
    threads: int | None = None,
) -> ConvergenceReport:
    """Errors and orders over a time-step ladder at fixed ``nx``."""
    if not nt_ladder:
        raise ValueError("nt_ladder must not be empty")
    T = problem.final_time if t_eval is None else t_eval
    grids = [Grid(nx=nx, nt=nt, length=problem.length, final_time=T) for nt in nt_ladder]
    return _table(grids, T, "time", problem, threads)
