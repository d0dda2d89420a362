"""Tests for the shared linear-algebra helpers."""

import numpy as np
import pytest

from gaussfock.errors import (
    DimensionMismatchError,
    NotSymmetricError,
    SingularMatrixError,
)
from gaussfock.linalg import (
    as_matrix,
    as_vector,
    eig_log_det,
    hs_norm,
    involution,
    log_sqrt_det_inv,
    mat_adjoint,
    mat_conj,
    operator_norm,
    takagi,
)

rng = np.random.default_rng(1234)


def random_complex(*shape):
    return rng.normal(size=shape) + 1j * rng.normal(size=shape)


class TestCoercions:
    def test_vector_shape_enforced(self):
        with pytest.raises(DimensionMismatchError):
            as_vector(np.zeros((2, 2)))
        with pytest.raises(DimensionMismatchError):
            as_vector(np.zeros(3), dim=2)

    def test_matrix_shape_enforced(self):
        with pytest.raises(DimensionMismatchError):
            as_matrix(np.zeros((2, 3)))
        with pytest.raises(DimensionMismatchError):
            as_matrix(np.zeros((2, 2)), dim=3)

    def test_involution_conjugates(self):
        f = random_complex(4)
        assert np.array_equal(involution(f), np.conj(f))

    def test_adjoint_transpose_conjugate(self):
        A = random_complex(3, 3)
        assert np.array_equal(mat_adjoint(A), np.conj(A).T)
        assert np.array_equal(mat_conj(A), np.conj(A))


class TestNorms:
    def test_operator_norm_is_largest_singular_value(self):
        A = random_complex(4, 4)
        assert operator_norm(A) == pytest.approx(np.linalg.svd(A)[1][0])

    def test_hs_norm_is_frobenius(self):
        A = random_complex(4, 4)
        assert hs_norm(A) == pytest.approx(np.linalg.norm(A, "fro"))


class TestEigLogDet:
    """Principal-branch log-determinants through eigenvalue logs."""

    def test_matches_plain_logdet_near_identity(self):
        for _ in range(20):
            M = np.eye(4) + 0.3 * random_complex(4, 4)
            val = eig_log_det(M)
            assert np.exp(val) == pytest.approx(np.linalg.det(M), rel=1e-12)

    def test_log_sqrt_det_inv_squares_back(self):
        M = np.eye(3) + 0.4 * random_complex(3, 3)
        half = log_sqrt_det_inv(M)
        assert np.exp(-2 * half) == pytest.approx(np.linalg.det(M), rel=1e-12)

    def test_singular_matrix_rejected(self):
        M = np.diag([1.0, 0.0, 2.0]).astype(complex)
        with pytest.raises(SingularMatrixError):
            eig_log_det(M)

    def test_branch_stays_principal_per_eigenvalue(self):
        # eigenvalues in the right half plane: imaginary part of the result
        # must equal the sum of principal args, never a 2 pi jump
        w = np.array([0.5 + 0.4j, 1.2 - 0.3j, 0.9 + 0.8j])
        Q = np.linalg.qr(random_complex(3, 3))[0]
        M = Q @ np.diag(w) @ np.linalg.inv(Q)
        expected = np.sum(np.log(w))
        assert eig_log_det(M) == pytest.approx(expected, abs=1e-10)


class TestTakagi:
    def test_zero_matrix(self):
        F, alphas = takagi(np.zeros((3, 3)))
        assert np.allclose(alphas, 0.0)
        assert np.allclose(mat_adjoint(F) @ F, np.eye(3), atol=1e-12)

    def test_real_diagonal_is_fixed_point(self):
        A = np.diag([0.5, 0.2]).astype(complex)
        F, alphas = takagi(A)
        assert np.allclose(alphas, [0.5, 0.2])
        # columns may carry phases; reconstruction is the invariant
        assert np.allclose(F @ np.diag(alphas) @ F.T, A, atol=1e-12)

    def test_not_symmetric_rejected(self):
        with pytest.raises(NotSymmetricError):
            takagi(random_complex(4, 4))

    @pytest.mark.parametrize("d", [1, 2, 3, 4, 6, 8])
    def test_random_reconstruction(self, d):
        for _ in range(25):
            A = random_complex(d, d)
            A = 0.45 * (A + A.T) / max(operator_norm(A + A.T), 1.0)
            F, alphas = takagi(A)
            assert np.all(alphas >= 0)
            assert np.all(np.diff(alphas) <= 1e-12)
            assert hs_norm(mat_adjoint(F) @ F - np.eye(d)) < 1e-10
            assert hs_norm(F @ np.diag(alphas) @ F.T - A) <= 1e-10 * (
                1 + operator_norm(A))

    def test_alphas_are_singular_values(self):
        A = random_complex(5, 5)
        A = A + A.T
        _, alphas = takagi(A)
        assert np.allclose(alphas, np.linalg.svd(A)[1], atol=1e-10)

    def test_coneigenvector_equation(self):
        # independent check: A conj(F) = F diag(alphas)
        A = random_complex(4, 4)
        A = 0.3 * (A + A.T)
        F, alphas = takagi(A)
        assert np.allclose(A @ np.conj(F), F @ np.diag(alphas), atol=1e-10)

    def test_degenerate_singular_values(self):
        # repeated alphas still give a valid factorization
        F0 = np.linalg.qr(random_complex(4, 4))[0]
        A = F0 @ np.diag([0.5, 0.5, 0.5, 0.1]) @ F0.T
        F, alphas = takagi(A)
        assert np.allclose(F @ np.diag(alphas) @ F.T, A, atol=1e-10)
        assert np.allclose(alphas, [0.5, 0.5, 0.5, 0.1], atol=1e-10)

    def test_rank_deficient(self):
        F0 = np.linalg.qr(random_complex(3, 3))[0]
        A = F0 @ np.diag([0.7, 0.0, 0.0]) @ F0.T
        F, alphas = takagi(A)
        assert np.allclose(F @ np.diag(alphas) @ F.T, A, atol=1e-10)
        assert hs_norm(mat_adjoint(F) @ F - np.eye(3)) < 1e-10
