"""Observed convergence orders."""

import math
from collections.abc import Sequence

import numpy as np


def fit_order(steps: Sequence[float], values: Sequence[float]) -> float:
    """
    Least-squares slope of log(values) against log(steps).

    Raises:
        ValueError: With fewer than two points or non-positive entries
    """
    s = np.asarray(steps, dtype=np.float64)
    v = np.asarray(values, dtype=np.float64)
    if s.shape != v.shape or s.size < 2:
        raise ValueError(f"need at least two matching points, got {s.size} and {v.size}")
    if np.any(s <= 0) or np.any(v <= 0):
        raise ValueError("steps and values must be positive to fit a log-log slope")
    slope, _ = np.polyfit(np.log(s), np.log(v), 1)
    return float(slope)


def pairwise_order(step_coarse: float, step_fine: float, e_coarse: float, e_fine: float) -> float:
    """Order between two consecutive rows; log2(e_2h / e_h) when the step halves."""
    return math.log(e_coarse / e_fine) / math.log(step_coarse / step_fine)
