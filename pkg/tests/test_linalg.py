"""Tests for the banded, tridiagonal, dense and eigenvalue solvers."""

import math

import numpy as np
import pytest

from analysis.stability import REMARK_ACAL, REMARK_BCAL
from linalg import (
    BandedMatrix,
    DimensionMismatchError,
    SingularMatrixError,
    Spectrum,
    TridiagMatrix,
    banded_factor,
    commutes,
    dense_solve,
    eigenvalues,
    gershgorin_discs,
    spectral_radius,
    tridiag_solve,
)
from tests.conftest import assert_same_spectrum


def _random_band(rng: np.random.Generator, n: int, kl: int, ku: int) -> np.ndarray:
    M = rng.normal(size=(n, n))
    M = np.triu(np.tril(M, ku), -kl)
    M += np.diag(np.full(n, 2.0 * (kl + ku + 1)))
    return M


class TestTridiag:
    def test_identity_like(self):
        M = TridiagMatrix.toeplitz(3, 0.0, 1.0, 0.0)
        rhs = np.array([1.0, -2.0, 3.5])
        np.testing.assert_array_equal(tridiag_solve(M, rhs), rhs)

    def test_compact_weights_row_sums(self):
        A = TridiagMatrix.toeplitz(5, 1.0 / 12.0, 5.0 / 6.0, 1.0 / 12.0)
        ones = np.ones(5)
        np.testing.assert_allclose(tridiag_solve(A, A.matvec(ones)), ones, rtol=1e-14)
        np.testing.assert_allclose(
            tridiag_solve(A, ones), np.linalg.solve(A.to_dense(), ones), rtol=1e-14
        )

    def test_random_dominant_matches_dense(self, rng):
        n = 50
        sub, sup = rng.normal(size=n - 1), rng.normal(size=n - 1)
        main = np.abs(sub).max() + np.abs(sup).max() + 1.0 + rng.uniform(size=n)
        M = TridiagMatrix.from_bands(sub, main, sup)
        rhs = rng.normal(size=n)
        expected = np.linalg.solve(M.to_dense(), rhs)
        np.testing.assert_allclose(tridiag_solve(M, rhs), expected, rtol=1e-12, atol=1e-12)

    def test_many_random_systems_match_dense(self, rng):
        for _ in range(200):
            n = int(rng.integers(2, 65))
            sub, sup = rng.normal(size=n - 1), rng.normal(size=n - 1)
            main = (np.abs(sub).max() + np.abs(sup).max() + 0.5) * rng.choice([-1.0, 1.0], size=n)
            M = TridiagMatrix.from_bands(sub, main, sup)
            rhs = rng.normal(size=n)
            expected = np.linalg.solve(M.to_dense(), rhs)
            np.testing.assert_allclose(tridiag_solve(M, rhs), expected, rtol=1e-12, atol=1e-12)

    def test_zero_pivot_falls_back_to_pivoting(self):
        M = TridiagMatrix.from_bands([1.0], [0.0, 0.0], [1.0])
        np.testing.assert_allclose(tridiag_solve(M, [2.0, 3.0]), [3.0, 2.0])

    def test_singular(self):
        with pytest.raises(SingularMatrixError):
            tridiag_solve(TridiagMatrix.toeplitz(3, 0.0, 0.0, 0.0), np.ones(3))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            tridiag_solve(TridiagMatrix.toeplitz(3, 1.0, 4.0, 1.0), np.ones(4))

    def test_bands_are_read_only(self):
        M = TridiagMatrix.toeplitz(4, 1.0, 2.0, 3.0)
        assert M.lower[0] == 0.0 and M.upper[-1] == 0.0
        with pytest.raises(ValueError):
            M.diag[0] = 9.0

    def test_structure_queries(self):
        M = TridiagMatrix.toeplitz(4, -1.0, 2.0, -1.0)
        assert M.is_toeplitz and M.is_symmetric()
        N = TridiagMatrix.from_bands([1.0, 2.0], [1.0, 1.0, 1.0], [3.0, 4.0])
        assert not N.is_toeplitz and not N.is_symmetric()


class TestCommutes:
    def test_compact_matrices_commute(self):
        A = TridiagMatrix.toeplitz(8, 1.0 / 12.0, 5.0 / 6.0, 1.0 / 12.0)
        B = TridiagMatrix.toeplitz(8, -1.0, 2.0, -1.0)
        assert commutes(A, B)

    def test_identity_commutes_with_anything(self, rng):
        identity = TridiagMatrix.toeplitz(6, 0.0, 1.0, 0.0)
        B = TridiagMatrix.from_bands(rng.normal(size=5), rng.normal(size=6), rng.normal(size=5))
        assert commutes(identity, B)

    def test_random_symmetric_toeplitz_pairs(self, rng):
        for _ in range(100):
            n = int(rng.integers(1, 65))
            off_a, main_a, off_b, main_b = rng.uniform(-10.0, 10.0, size=4)
            A = TridiagMatrix.toeplitz(n, off_a, main_a, off_a)
            B = TridiagMatrix.toeplitz(n, off_b, main_b, off_b)
            assert commutes(A, B), (n, off_a, main_a, off_b, main_b)

    def test_non_toeplitz_perturbation(self):
        A = TridiagMatrix.from_bands([1.0, 1.0], [2.0, 3.0, 4.0], [1.0, 1.0])
        B = TridiagMatrix.toeplitz(3, -1.0, 2.0, -1.0)
        assert not commutes(A, B)


class TestBanded:
    def test_identity(self, rng):
        factor = banded_factor(BandedMatrix.from_dense(np.eye(6), 2, 1))
        rhs = rng.normal(size=6)
        np.testing.assert_allclose(factor.solve(rhs), rhs, rtol=0, atol=0)

    def test_random_systems_match_dense(self, rng):
        for _ in range(200):
            n = int(rng.integers(1, 40))
            kl, ku = int(rng.integers(0, 4)), int(rng.integers(0, 4))
            dense = _random_band(rng, n, kl, ku)
            rhs = rng.normal(size=n)
            x = banded_factor(BandedMatrix.from_dense(dense, kl, ku)).solve(rhs)
            np.testing.assert_allclose(x, np.linalg.solve(dense, rhs), rtol=1e-10, atol=1e-12)

    def test_pivoting_required(self):
        # zero leading pivot; elimination must swap rows
        dense = np.array([[0.0, 1.0, 0.0], [2.0, 1.0, 1.0], [0.0, 3.0, 4.0]])
        x = banded_factor(BandedMatrix.from_dense(dense, 1, 1)).solve(np.array([1.0, 2.0, 3.0]))
        expected = np.linalg.solve(dense, [1.0, 2.0, 3.0])
        np.testing.assert_allclose(x, expected, rtol=1e-14, atol=1e-14)

    def test_interleaved_blocks_match_dense(self, rng):
        # 2x2 blocks of tridiagonal matrices, interleaved, n = 3 per block
        A = TridiagMatrix.toeplitz(3, 1.0 / 12.0, 5.0 / 6.0, 1.0 / 12.0).to_dense()
        B = TridiagMatrix.toeplitz(3, -1.0, 2.0, -1.0).to_dense()
        stacked = np.block([[A + 0.3 * A, -0.5 * B], [0.5 * B, A]])
        perm = np.concatenate((2 * np.arange(3), 2 * np.arange(3) + 1))
        inverse = np.argsort(perm)
        interleaved = stacked[np.ix_(inverse, inverse)]
        rhs = rng.normal(size=6)
        x = banded_factor(BandedMatrix.from_dense(interleaved, 3, 3)).solve(rhs)
        np.testing.assert_allclose(x, np.linalg.solve(interleaved, rhs), rtol=1e-12, atol=1e-12)

    def test_solve_many(self, rng):
        dense = _random_band(rng, 10, 2, 3)
        rhs = rng.normal(size=(10, 4))
        X = banded_factor(BandedMatrix.from_dense(dense, 2, 3)).solve_many(rhs)
        np.testing.assert_allclose(X, np.linalg.solve(dense, rhs), rtol=1e-12, atol=1e-12)

    def test_singular(self):
        with pytest.raises(SingularMatrixError) as info:
            banded_factor(BandedMatrix.zeros(4, 1, 1))
        assert info.value.pivot_index == 0

    def test_storage_round_trip_and_matvec(self, rng):
        dense = _random_band(rng, 7, 2, 1)
        M = BandedMatrix.from_dense(dense, 2, 1)
        np.testing.assert_array_equal(M.to_dense(), dense)
        v = rng.normal(size=7)
        np.testing.assert_allclose(M.matvec(v), dense @ v, rtol=1e-14, atol=1e-13)
        assert M.norm_inf() == pytest.approx(np.abs(dense).sum(axis=1).max())
        np.testing.assert_array_equal(M.diagonal(2), np.diag(dense, -2))
        np.testing.assert_array_equal(M.diagonal(-1), np.diag(dense, 1))

    def test_entries_outside_band_rejected(self):
        with pytest.raises(ValueError):
            BandedMatrix.from_dense(np.ones((3, 3)), 1, 0)

    def test_arithmetic_widens_bands(self, rng):
        P = _random_band(rng, 6, 1, 0)
        R = _random_band(rng, 6, 0, 2)
        a, b = BandedMatrix.from_dense(P, 1, 0), BandedMatrix.from_dense(R, 0, 2)
        np.testing.assert_allclose((a + b).to_dense(), P + R)
        np.testing.assert_allclose((a - b.scaled(2.0)).to_dense(), P - 2.0 * R)


class TestDense:
    def test_matches_numpy(self, rng):
        M = rng.normal(size=(12, 12)) + 5.0 * np.eye(12)
        b = rng.normal(size=12)
        np.testing.assert_allclose(dense_solve(M, b), np.linalg.solve(M, b), rtol=1e-12, atol=1e-12)
        B = rng.normal(size=(12, 3))
        np.testing.assert_allclose(dense_solve(M, B), np.linalg.solve(M, B), rtol=1e-12, atol=1e-12)

    def test_singular(self):
        with pytest.raises(SingularMatrixError):
            dense_solve(np.array([[1.0, 2.0], [2.0, 4.0]]), np.ones(2))


class TestEigenvalues:
    def test_tridiagonal_toeplitz_closed_form(self):
        M = TridiagMatrix.toeplitz(4, -1.0, 2.0, -1.0).to_dense()
        s = eigenvalues(M)
        expected = [2.0 - 2.0 * math.cos(k * math.pi / 5.0) for k in range(1, 5)]
        assert s.converged
        np.testing.assert_allclose(s.eigenvalues.real, sorted(expected), atol=1e-12)
        np.testing.assert_allclose(s.eigenvalues.imag, 0.0, atol=1e-12)

    def test_counterexample_matrix(self):
        s = eigenvalues(REMARK_BCAL)
        expected = [-4.2503, -1.3154, -0.2172 - 4.1164j, -0.2172 + 4.1164j]
        assert_same_spectrum(s.eigenvalues, expected, atol=1e-4)

    def test_counterexample_generalized_problem(self):
        s = eigenvalues(dense_solve(REMARK_ACAL, REMARK_BCAL))
        expected = [-6.4027, -1.2627, 0.0751 - 4.9855j, 0.0751 + 4.9855j]
        assert_same_spectrum(s.eigenvalues, expected, atol=1e-4)

    def test_random_matrices(self, rng):
        for n in (2, 5, 10, 25):
            M = rng.normal(size=(n, n))
            s = eigenvalues(M)
            assert s.converged
            assert len(s) == n
            assert s.eigenvalues.sum().real == pytest.approx(np.trace(M), abs=1e-9 * n)
            assert abs(s.eigenvalues.sum().imag) < 1e-9
            assert_same_spectrum(s.eigenvalues, np.linalg.eigvals(M), atol=1e-8)

    @pytest.mark.parametrize("n", [64, 200, pytest.param(512, marks=pytest.mark.slow)])
    def test_trace_identity(self, rng, n):
        M = rng.normal(size=(n, n))
        s = eigenvalues(M)
        assert s.converged
        scale = float(np.max(np.abs(M).sum(axis=1)))
        assert abs(s.eigenvalues.sum() - np.trace(M)) <= 1e-8 * scale

    def test_sorted_by_real_then_imaginary(self, rng):
        s = eigenvalues(rng.normal(size=(8, 8)))
        pairs = s.pairs()
        assert pairs == sorted(pairs)

    def test_single_entry(self):
        s = eigenvalues(np.array([[-3.0]]))
        assert s.pairs() == [(-3.0, 0.0)]
        assert spectral_radius(s) == 3.0

    def test_spectral_radius(self):
        assert spectral_radius(eigenvalues(np.diag([1.0, -1.0]))) == pytest.approx(1.0)
        s = Spectrum(np.array([0.0751 + 4.9855j, 0.0751 - 4.9855j]), 1, True)
        assert spectral_radius(s) == pytest.approx(4.98607, abs=1e-4)

    def test_unconverged_radius_undefined(self):
        with pytest.raises(ValueError):
            spectral_radius(Spectrum(np.array([np.nan + 0j]), 30, False))

    def test_rejects_bad_input(self):
        with pytest.raises(DimensionMismatchError):
            eigenvalues(np.ones((2, 3)))
        with pytest.raises(ValueError):
            eigenvalues(np.array([[np.inf]]))

    def test_gershgorin(self):
        assert gershgorin_discs([[4.0, 1.0], [2.0, -3.0]]) == [(4.0, 1.0), (-3.0, 2.0)]
