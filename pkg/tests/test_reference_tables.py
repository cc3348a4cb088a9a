"""Reference error tables at t = 1 with dt = h^2."""

import pytest

from analysis import convergence_table, max_error
from schemas.examples import REFERENCE_ERRORS, builtin_problem, reference_problem
from schemas.models import Grid

LADDERS = {
    1: [32, 64, 128, 256],
    2: [32, 64, 128, 256, 512],
    # the Nx = 512 row superconverges and is only reported
    3: [32, 64, 128, 256],
}


@pytest.mark.parametrize("example", [1, 2, 3])
def test_first_row(example):
    problem = reference_problem(example)
    error = max_error(problem, Grid.from_problem(problem, 32))
    assert error == pytest.approx(REFERENCE_ERRORS[example][32], rel=0.01)


def test_reference_coefficients_only_change_example_one():
    for example in (2, 3):
        assert reference_problem(example) == builtin_problem(example)
    p = reference_problem(1)
    assert (p.EI, p.rho, p.c) == (1.0, 1.0, 1.0)
    assert p.u_exact == builtin_problem(1).u_exact


@pytest.fixture(scope="module")
def reports():
    return {
        k: convergence_table(reference_problem(k), ladder, t_eval=1.0, dt="h2")
        for k, ladder in LADDERS.items()
    }


@pytest.mark.slow
@pytest.mark.parametrize("example", [1, 2, 3])
def test_errors_match_reference(reports, example):
    for row in reports[example].rows:
        if row.nx <= 256:
            assert row.error == pytest.approx(REFERENCE_ERRORS[example][row.nx], rel=0.01), row


@pytest.mark.slow
@pytest.mark.parametrize("example", [1, 3])
def test_fourth_order(reports, example):
    report = reports[example]
    assert report.monotone
    for order in report.orders:
        assert order == pytest.approx(4.0, abs=0.05)


@pytest.mark.slow
def test_example_two_average_order(reports):
    report = reports[2]
    assert report.monotone
    assert [r.nx for r in report.rows] == LADDERS[2]
    assert report.average_order == pytest.approx(3.989, abs=0.05)
