"""
Truncation-residual measurement of the fully discrete scheme.

Exact solution samples U* = (u_t, u_xx) at the interior nodes are inserted
into the scheme; the residual

    Acal (U*^{n+1} - U*^n) / dt - Bcal (U*^{n+1} + U*^n) / 2 - (F^{n+1} + F^n) / 2

decays like O(h^4) + O(dt^2).
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from analysis.fitting import fit_order
from discretize import BoundaryForcing, assemble_block, interleave
from exprcalc import diff, sample
from schemas.models import BeamProblem, Grid, StepRule

logger = logging.getLogger(__name__)

SPATIAL_ORDER_RANGE = (3.7, 4.5)
TEMPORAL_ORDER_RANGE = (1.8, 2.2)
DEFAULT_TEMPORAL_NX = 256
# Residuals within this many ulps of the operator scale count as round-off.
FLOOR_ULPS = 16.0


@dataclass(frozen=True)
class ConsistencyRow:
    kind: str  # "space" or "time"
    nx: int
    h: float
    dt: float
    residual: float
    at_floor: bool = False  # residual is round-off; excluded from the fit


@dataclass
class ConsistencyReport:
    """Residuals along the spatial and temporal ladders with fitted slopes."""

    rows: list[ConsistencyRow] = field(default_factory=list)
    spatial_order: float | None = None
    temporal_order: float | None = None

    def spatial_exact(self) -> bool:
        """Every spatial residual sits at the round-off floor."""
        space = [r for r in self.rows if r.kind == "space"]
        return bool(space) and all(r.at_floor for r in space)

    def spatial_ok(self) -> bool:
        if self.spatial_order is None:
            return self.spatial_exact()
        lo, hi = SPATIAL_ORDER_RANGE
        return lo <= self.spatial_order <= hi

    def temporal_ok(self) -> bool:
        lo, hi = TEMPORAL_ORDER_RANGE
        return self.temporal_order is None or lo <= self.temporal_order <= hi

    @property
    def passed(self) -> bool:
        return self.spatial_ok() and self.temporal_ok()


def _sample_times(nt: int) -> list[int]:
    return sorted({0, nt // 4, nt // 2, (3 * nt) // 4, nt - 1})


def scheme_residual(problem: BeamProblem, grid: Grid) -> float:
    """
    Max-norm truncation residual of one step, maximised over a few time levels.

    Raises:
        ValueError: If the problem has no exact solution
    """
    return _residual(problem, grid)[0]


def _residual(problem: BeamProblem, grid: Grid) -> tuple[float, float]:
    """Residual together with its round-off floor."""
    if problem.u_exact is None:
        raise ValueError("consistency needs a problem with an exact solution")
    ops = assemble_block(problem, grid)
    forcing = BoundaryForcing(problem, grid)
    u_t = diff(problem.u_exact, "t")
    u_xx = diff(problem.u_exact, "x", order=2)
    x = grid.interior

    def exact_state(t: float) -> NDArray[np.float64]:
        return interleave(sample(u_t, x, t), sample(u_xx, x, t))

    operator_scale = ops.Acal.norm_inf() / grid.dt + ops.Bcal.norm_inf()
    worst = scale = 0.0
    for n in _sample_times(grid.nt):
        t0, t1 = grid.time(n), grid.time(n + 1)
        U0, U1 = exact_state(t0), exact_state(t1)
        F = 0.5 * (forcing.interleaved(t1) + forcing.interleaved(t0))
        r = ops.Acal.matvec(U1 - U0) / grid.dt - 0.5 * ops.Bcal.matvec(U1 + U0) - F
        worst = max(worst, float(np.max(np.abs(r))))
        state = max(float(np.max(np.abs(U0))), float(np.max(np.abs(U1))))
        scale = max(scale, operator_scale * state + float(np.max(np.abs(F))))
    return worst, FLOOR_ULPS * float(np.finfo(np.float64).eps) * scale


def consistency_order(
    problem: BeamProblem,
    ladder: Sequence[int],
    dt: StepRule = "h2",
    nt_ladder: Sequence[int] = (),
    nx_time: int = DEFAULT_TEMPORAL_NX,
) -> ConsistencyReport:
    """
    Fit the spatial and temporal orders of the truncation residual.

    Args:
        problem: Problem with an exact solution
        ladder: Nx values for the spatial study (dt coupled by ``dt``)
        dt: Time-step rule for the spatial study
        nt_ladder: Nt values for the temporal study at fixed ``nx_time``
        nx_time: Spatial resolution of the temporal study

    Returns:
        Report with residual rows and least-squares slopes
    """
    report = ConsistencyReport()
    for nx in ladder:
        grid = Grid.from_problem(problem, nx, dt)
        report.rows.append(_row("space", problem, grid))
    report.spatial_order = _fitted([r for r in report.rows if r.kind == "space"], "h")

    for nt in nt_ladder:
        grid = Grid(nx=nx_time, nt=nt, length=problem.length, final_time=problem.final_time)
        report.rows.append(_row("time", problem, grid))
    report.temporal_order = _fitted([r for r in report.rows if r.kind == "time"], "dt")
    return report


def _row(kind: str, problem: BeamProblem, grid: Grid) -> ConsistencyRow:
    residual, floor = _residual(problem, grid)
    at_floor = residual <= floor
    logger.info(
        f"Consistency {kind} nx={grid.nx} nt={grid.nt}: residual {residual:.3e}"
        + (" (round-off floor)" if at_floor else "")
    )
    return ConsistencyRow(kind, grid.nx, grid.h, grid.dt, residual, at_floor)


def _fitted(rows: list[ConsistencyRow], step: str) -> float | None:
    """Slope over the rows above the floor; None with fewer than two of them."""
    usable = [r for r in rows if not r.at_floor]
    dropped = len(rows) - len(usable)
    if dropped:
        logger.warning(
            f"{dropped} of {len(rows)} {step} residuals at round-off, left out of the fit"
        )
    if len(usable) < 2:
        if rows:
            logger.warning(f"Order in {step} undefined: fewer than two residuals above round-off")
        return None
    return fit_order([getattr(r, step) for r in usable], [r.residual for r in usable])
