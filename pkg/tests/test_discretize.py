"""Tests for the compact operators, the load vector and the initial state."""

import math

import numpy as np
import pytest

from analysis.fitting import fit_order
from discretize import (
    BoundaryForcing,
    assemble_block,
    boundary_force,
    build_A,
    build_B,
    compact_moment,
    deinterleave,
    initial_state,
    interleave,
    stacked_permutation,
)
from exprcalc import parse
from linalg import commutes, dense_solve, eigenvalues
from schemas.models import BeamProblem, Grid


class TestOperators:
    def test_build_A(self):
        expected = [[5 / 6, 1 / 12, 0], [1 / 12, 5 / 6, 1 / 12], [0, 1 / 12, 5 / 6]]
        np.testing.assert_allclose(build_A(3).to_dense(), expected, rtol=1e-15)
        np.testing.assert_allclose(build_A(1).to_dense(), [[5 / 6]])

    def test_build_B(self):
        expected = [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]
        np.testing.assert_array_equal(build_B(3, 1.0).to_dense(), expected)
        np.testing.assert_allclose(build_B(3, 0.5).to_dense(), 4.0 * np.array(expected))

    @pytest.mark.parametrize("n", [1, 2, 7, 16, 33, 64])
    @pytest.mark.parametrize("h", [0.5, 1.0 / 64, 1e-3])
    def test_A_and_B_commute(self, n, h):
        assert commutes(build_A(n), build_B(n, h))

    @pytest.mark.parametrize("n", [1, 2, 5, 16, 64])
    def test_A_positive_definite(self, n):
        s = eigenvalues(build_A(n).to_dense())
        assert s.converged
        np.testing.assert_allclose(s.eigenvalues.imag, 0.0, atol=1e-12)
        expected = [5.0 / 6.0 + math.cos(k * math.pi / (n + 1)) / 6.0 for k in range(1, n + 1)]
        np.testing.assert_allclose(s.eigenvalues.real, sorted(expected), atol=1e-12)
        assert s.eigenvalues.real.min() > 2.0 / 3.0

    def test_build_B_rejects_bad_mesh(self):
        with pytest.raises(ValueError):
            build_B(3, 0.0)

    def test_interleave_round_trip(self, rng):
        phi, psi = rng.normal(size=5), rng.normal(size=5)
        v = interleave(phi, psi)
        np.testing.assert_array_equal(v[0::2], phi)
        back_phi, back_psi = deinterleave(v)
        np.testing.assert_array_equal(back_phi, phi)
        np.testing.assert_array_equal(back_psi, psi)
        p = stacked_permutation(5)
        np.testing.assert_array_equal(v[p], np.concatenate((phi, psi)))

    def test_block_operators_match_dense_blocks(self, example1):
        grid = Grid(nx=9, nt=1)
        ops = assemble_block(example1, grid)
        A = build_A(8).to_dense()
        B = build_B(8, grid.h).to_dense()
        Z = np.zeros_like(A)
        Acal, Bcal = ops.stacked_dense()
        np.testing.assert_allclose(Acal, np.block([[example1.rho * A, Z], [Z, A]]), rtol=1e-15)
        np.testing.assert_allclose(
            Bcal, np.block([[-example1.c * A, example1.EI * B], [-B, Z]]), rtol=1e-15
        )
        assert ops.Acal.kl == ops.Acal.ku == 3
        assert ops.m == 8

    def test_stacked_spectrum_in_left_half_plane(self, example1):
        Acal, Bcal = assemble_block(example1, Grid(nx=8, nt=1)).stacked_dense()
        assert eigenvalues(dense_solve(Acal, Bcal)).max_real <= 1e-10


class TestBoundaryForce:
    def test_homogeneous_data_vanishes(self, homogeneous_problem):
        grid = Grid(nx=8, nt=4)
        np.testing.assert_array_equal(boundary_force(homogeneous_problem, grid, 0.3), 0.0)

    def test_hand_evaluated_boundary_terms(self, example2):
        # u = sinh(t) cos(pi x), EI = rho = c = 1
        grid = Grid(nx=8, nt=1)
        t = 0.5
        sh, ch, pi2 = math.sinh(t), math.cosh(t), math.pi**2
        h2 = grid.h**2
        alpha, beta, alpha_p, beta_p = BoundaryForcing(example2, grid).boundary_terms(t)
        assert alpha == pytest.approx(pi2 * sh / h2 - sh / 12 - ch / 12, rel=1e-12)
        assert beta == pytest.approx(-pi2 * sh / h2 + sh / 12 + ch / 12, rel=1e-12)
        assert alpha_p == pytest.approx(ch / h2 + pi2 * ch / 12, rel=1e-12)
        assert beta_p == pytest.approx(-ch / h2 - pi2 * ch / 12, rel=1e-12)

    def test_layouts_agree(self, example1):
        grid = Grid(nx=8, nt=1)
        forcing = BoundaryForcing(example1, grid)
        F1, F2 = forcing.blocks(0.25)
        np.testing.assert_array_equal(forcing.stacked(0.25), np.concatenate((F1, F2)))
        np.testing.assert_array_equal(forcing.interleaved(0.25), interleave(F1, F2))
        assert F1.shape == F2.shape == (7,)

    def test_linear_in_data(self, example3, rng):
        grid = Grid(nx=10, nt=1)
        t = float(rng.uniform())
        np.testing.assert_allclose(
            boundary_force(example3.scaled(2.0), grid, t),
            2.0 * boundary_force(example3, grid, t),
            rtol=1e-13,
        )


class TestInitialState:
    def test_zero_moment_data(self, example2):
        grid = Grid(nx=16, nt=1)
        U0 = initial_state(example2, grid)
        np.testing.assert_allclose(U0.phi, np.cos(math.pi * grid.interior), rtol=1e-14)
        np.testing.assert_array_equal(U0.psi, 0.0)
        assert U0.time_index == 0

    def test_exact_moment_sampled(self, example1):
        grid = Grid(nx=16, nt=1)
        psi = initial_state(example1, grid).psi
        exact = -(math.pi**2) * np.sin(math.pi * grid.interior)
        np.testing.assert_allclose(psi, exact, rtol=1e-13, atol=1e-13)

    def test_compact_moment_without_exact_solution(self, example1):
        grid = Grid(nx=16, nt=1)
        problem = example1.model_copy(update={"u_exact": None})
        np.testing.assert_array_equal(
            initial_state(problem, grid).psi, compact_moment(example1, grid)
        )

    def test_compact_moment_fourth_order(self, example1):
        ladder = (16, 32, 64)
        errors = []
        for nx in ladder:
            grid = Grid(nx=nx, nt=1)
            psi = compact_moment(example1, grid)
            exact = -(math.pi**2) * np.sin(math.pi * grid.interior)
            errors.append(float(np.max(np.abs(psi - exact))))
        assert fit_order([1.0 / n for n in ladder], errors) == pytest.approx(4.0, abs=0.2)

    def test_compact_moment_exact_on_quadratics(self):
        problem = BeamProblem.from_exact(parse("x*(1 - x)*exp(t)"), EI=1.0, rho=1.0, c=1.0)
        psi = compact_moment(problem, Grid(nx=6, nt=1))
        # u_xx = -2 e^t is reproduced exactly by the compact relation
        np.testing.assert_allclose(psi, -2.0, rtol=1e-12)
