"""Shared fixtures for the beam-compact test suite."""

import sys
from pathlib import Path

import numpy as np
import pytest

# the packages live at the repository root rather than under src/
REPO_ROOT = str(Path(__file__).resolve().parent.parent)
if REPO_ROOT not in sys.path:
    sys.path.insert(0, REPO_ROOT)

from schemas.examples import builtin_problem  # noqa: E402
from schemas.models import BeamProblem  # noqa: E402


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240617)


@pytest.fixture(scope="session")
def example1() -> BeamProblem:
    return builtin_problem(1)


@pytest.fixture(scope="session")
def example2() -> BeamProblem:
    return builtin_problem(2)


@pytest.fixture(scope="session")
def example3() -> BeamProblem:
    return builtin_problem(3)


@pytest.fixture
def homogeneous_problem() -> BeamProblem:
    """Undamped, unforced beam released from a sine profile."""
    return BeamProblem.model_validate(
        {
            "EI": 2.0,
            "rho": 0.5,
            "c": 0.0,
            "xi1": _parse("sin(pi*x)"),
            "xi2": _parse("0"),
            "mu0": _parse("0"),
            "mu1": _parse("0"),
            "mu2": _parse("0"),
            "mu3": _parse("0"),
            "f": _parse("0"),
        }
    )


def _parse(text: str):  # type: ignore[no-untyped-def]
    from exprcalc import parse

    return parse(text)


def assert_same_spectrum(actual, expected, atol: float) -> None:  # type: ignore[no-untyped-def]
    """Every expected eigenvalue has a distinct computed partner within ``atol``."""
    remaining = list(np.asarray(actual, dtype=complex))
    assert len(remaining) == len(expected)
    for z in np.asarray(expected, dtype=complex):
        distances = [abs(w - z) for w in remaining]
        k = int(np.argmin(distances))
        assert distances[k] <= atol, f"no eigenvalue near {z}; closest {remaining[k]}"
        remaining.pop(k)
