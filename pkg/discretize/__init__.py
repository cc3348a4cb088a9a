"""
Semi-discrete compact system for the damped beam.

Modules:
- operators: A, B, the block operators and the interleaved ordering
- boundary: The load/boundary vector F(t)
- initial: The initial state U^0
"""

from discretize.boundary import BoundaryForcing, boundary_force
from discretize.initial import compact_moment, initial_state
from discretize.operators import (
    BlockOperators,
    assemble_block,
    build_A,
    build_B,
    deinterleave,
    interleave,
    stacked_permutation,
)
from schemas.models import BeamProblem, Grid, StateVector

__all__ = [
    "BeamProblem",
    "Grid",
    "StateVector",
    "BlockOperators",
    "build_A",
    "build_B",
    "assemble_block",
    "interleave",
    "deinterleave",
    "stacked_permutation",
    "BoundaryForcing",
    "boundary_force",
    "compact_moment",
    "initial_state",
]
