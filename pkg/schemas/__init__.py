"""
Pydantic schemas for beam-compact.

This module contains the problem and grid models, the built-in benchmark
problems and the run configuration used by the command line.
"""

from schemas.config import (
    AppSettings,
    CustomProblemConfig,
    ProblemSource,
    RunConfig,
    get_settings,
)
from schemas.examples import (
    EXAMPLES,
    REFERENCE_COEFFICIENTS,
    REFERENCE_ERRORS,
    BuiltinExample,
    builtin_problem,
    reference_problem,
)
from schemas.models import BeamProblem, Grid, StateVector

__all__ = [
    # Config
    "CustomProblemConfig",
    "ProblemSource",
    "RunConfig",
    "AppSettings",
    "get_settings",
    # Models
    "BeamProblem",
    "Grid",
    "StateVector",
    # Examples
    "BuiltinExample",
    "EXAMPLES",
    "REFERENCE_ERRORS",
    "REFERENCE_COEFFICIENTS",
    "builtin_problem",
    "reference_problem",
]
