"""Minimal smoke tests ensuring key modules import correctly."""

import pytest


@pytest.mark.parametrize(
    "module_path, expected_attributes",
    [
        ("numba", ["njit"]),
        ("schemas.config", ["RunConfig", "AppSettings", "get_settings"]),
        ("schemas.models", ["BeamProblem", "Grid", "StateVector"]),
        ("exprcalc", ["parse", "evaluate", "diff", "manufacture_forcing"]),
        ("linalg", ["tridiag_solve", "banded_factor", "eigenvalues", "commutes"]),
        ("discretize", ["build_A", "build_B", "assemble_block", "boundary_force"]),
        ("stepper", ["cn_step", "solve", "recover_u", "energy"]),
        (
            "analysis",
            [
                "stability_check",
                "consistency_order",
                "convergence_table",
                "remark_counterexample",
            ],
        ),
        ("publish", ["write_table"]),
        ("cli", ["main", "build_parser", "load_config"]),
    ],
)
def test_imports_expose_expected_attributes(module_path, expected_attributes):
    module = pytest.importorskip(module_path)
    for attribute in expected_attributes:
        assert hasattr(module, attribute), f"{module_path} missing {attribute}"
