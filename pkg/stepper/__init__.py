"""
Crank-Nicolson integration and displacement recovery.
"""

from stepper.crank_nicolson import (
    CnStepper,
    StepResidualError,
    Trajectory,
    cn_step,
    energy,
    solve,
)
from stepper.recovery import recover_u

__all__ = [
    "CnStepper",
    "Trajectory",
    "cn_step",
    "energy",
    "solve",
    "recover_u",
    "StepResidualError",
]
