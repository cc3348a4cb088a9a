"""
Stability, consistency and convergence studies of the compact CN scheme.
"""

from analysis.consistency import (
    ConsistencyReport,
    ConsistencyRow,
    consistency_order,
    scheme_residual,
)
from analysis.convergence import (
    ConvergenceReport,
    ConvergenceRow,
    convergence_table,
    max_error,
    temporal_convergence_table,
)
from analysis.fitting import fit_order, pairwise_order
from analysis.stability import (
    CounterexampleReport,
    StabilityReport,
    cayley_radius,
    modal_spectrum,
    operator_stability,
    remark_counterexample,
    stability_check,
)

__all__ = [
    "StabilityReport",
    "CounterexampleReport",
    "stability_check",
    "operator_stability",
    "remark_counterexample",
    "modal_spectrum",
    "cayley_radius",
    "ConsistencyReport",
    "ConsistencyRow",
    "consistency_order",
    "scheme_residual",
    "ConvergenceReport",
    "ConvergenceRow",
    "convergence_table",
    "temporal_convergence_table",
    "max_error",
    "fit_order",
    "pairwise_order",
]
