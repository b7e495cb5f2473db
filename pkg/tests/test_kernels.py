"""Matrix kernels: rank-one square roots, reflectors, Haar samples, boosts."""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose, assert_array_equal

from socaut import (
    RankOneSqrt,
    boost_matrix,
    householder_to_direction,
    inv_sqrt_rank_one,
    orthogonality_residual,
    sample_haar_orthogonal,
    signature_matrix,
    sqrt_rank_one,
)


def eigh_sqrt(A):
    """Oracle: symmetric square root through an eigendecomposition."""
    w, Q = np.linalg.eigh(A)
    return (Q * np.sqrt(w)) @ Q.T


class TestRankOneSqrt:
    def test_hand_value(self):
        # c = (3, 4): I + cc^T = [[10, 12], [12, 17]], a = sqrt(26)
        c = np.array([3.0, 4.0])
        r = RankOneSqrt.from_vector(c)
        assert r.m == 2
        assert r.a == math.sqrt(26.0)
        assert r.beta == 1.0 / (math.sqrt(26.0) + 1.0)
        assert_allclose(r.matrix() @ r.matrix(), [[10.0, 12.0], [12.0, 17.0]], atol=1e-13)

    def test_zero_vector(self):
        r = RankOneSqrt.from_vector(np.zeros(3))
        assert r.beta == 0.0
        assert r.a == 1.0
        assert_array_equal(r.matrix(), np.eye(3))
        assert_array_equal(r.inverse_matrix(), np.eye(3))

    def test_inverse_cancels(self):
        c = np.array([0.5, -2.0, 1.5])
        P = sqrt_rank_one(c)
        Q = inv_sqrt_rank_one(c)
        assert_allclose(P @ Q, np.eye(3), atol=1e-15)

    @pytest.mark.parametrize("scale", [1e-12, 1e-6, 1e-3, 1.0, 1e3, 1e6])
    def test_square_recovers_update(self, scale):
        rng = np.random.default_rng(5)
        for m in (1, 3, 10):
            c = scale * rng.standard_normal(m)
            P = sqrt_rank_one(c)
            target = np.eye(m) + np.outer(c, c)
            a2 = 1.0 + float(c @ c)
            assert np.max(np.abs(P @ P - target)) <= 1e-14 * max(1.0, a2)

    @pytest.mark.parametrize("scale", [1e-12, 1e-2, 1.0, 1e2, 1e6])
    def test_matches_eigh_oracle(self, scale):
        # Entrywise agreement scaled by the input's norm 1 + ||c||^2: the
        # oracle's small eigenvalues carry absolute error ~eps*||I + cc^T||,
        # so that is the natural comparison scale (the closed form itself is
        # pinned much tighter by test_square_recovers_update).
        rng = np.random.default_rng(11)
        for m in (1, 4, 9):
            c = scale * rng.standard_normal(m)
            P = sqrt_rank_one(c)
            oracle = eigh_sqrt(np.eye(m) + np.outer(c, c))
            a2 = 1.0 + float(c @ c)
            assert np.max(np.abs(P - oracle)) <= 1e-11 * max(1.0, a2)

    @settings(max_examples=60, deadline=None)
    @given(
        st.lists(st.floats(-1e4, 1e4, allow_nan=False), min_size=1, max_size=8),
        st.floats(min_value=1e-10, max_value=1e8),
    )
    def test_square_property(self, entries, scale):
        c = scale * np.asarray(entries) / max(1.0, np.max(np.abs(entries)))
        P = sqrt_rank_one(c)
        target = np.eye(c.size) + np.outer(c, c)
        a2 = 1.0 + float(c @ c)
        assert np.max(np.abs(P @ P - target)) <= 1e-13 * max(1.0, a2)

    def test_eigenvector_identity(self):
        # sqrt(I + alpha^2 e1 e1^T) e1 = sqrt(1 + alpha^2) e1
        for alpha in (0.0, 0.5, 3.0, 1e5):
            m = 4
            c = np.zeros(m)
            c[0] = alpha
            P = sqrt_rank_one(c)
            e1 = np.zeros(m)
            e1[0] = 1.0
            expected = math.sqrt(1.0 + alpha * alpha)
            assert_allclose(P @ e1, expected * e1, rtol=1e-15, atol=0.0)

    def test_maps_c_to_ac(self):
        # P c = a c: c spans the stretched eigendirection.
        rng = np.random.default_rng(3)
        for m in (1, 2, 6):
            c = rng.standard_normal(m) * 7.0
            r = RankOneSqrt.from_vector(c)
            assert_allclose(r.matrix() @ c, r.a * c, rtol=1e-14, atol=1e-14)

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            RankOneSqrt.from_vector([np.nan])
        with pytest.raises(ValueError):
            RankOneSqrt.from_vector([[1.0, 2.0]])
        with pytest.raises(ValueError):
            sqrt_rank_one(np.empty(0))


class TestHouseholder:
    def test_negative_scalar(self):
        assert_array_equal(householder_to_direction([-3.0]), [[-1.0]])

    def test_positive_scalar(self):
        assert_array_equal(householder_to_direction([2.0]), [[1.0]])

    def test_zero_gives_identity(self):
        assert_array_equal(householder_to_direction(np.zeros(4)), np.eye(4))

    def test_aligned_gives_identity(self):
        c = np.array([5.0, 0.0, 0.0])
        assert_array_equal(householder_to_direction(c), np.eye(3))

    def test_maps_e1_to_direction(self):
        rng = np.random.default_rng(17)
        for m in (1, 2, 5, 30):
            for _ in range(20):
                c = rng.standard_normal(m) * 10.0 ** rng.uniform(-6, 6)
                V = householder_to_direction(c)
                norm = np.linalg.norm(c)
                assert_allclose(V[:, 0], c / norm, atol=1e-14)
                # no sign flip: c = ||c|| V e1 with a non-negative factor
                assert float(c @ V[:, 0]) >= 0.0
                assert orthogonality_residual(V) <= 1e-14 * m
                # reflectors are symmetric and involutive
                assert_allclose(V, V.T, atol=0.0)
                assert_allclose(V @ V, np.eye(m), atol=1e-14)

    def test_antipodal_direction(self):
        V = householder_to_direction(np.array([-2.0, 0.0]))
        assert_array_equal(V, [[-1.0, 0.0], [0.0, 1.0]])


class TestOrthogonalityResidual:
    def test_identity_is_zero(self):
        assert orthogonality_residual(np.eye(5)) == 0.0

    def test_known_defect(self):
        # M = diag(1, 2): M^T M - I = diag(0, 3)
        assert orthogonality_residual(np.diag([1.0, 2.0])) == 3.0

    def test_rejects_nonsquare(self):
        with pytest.raises(ValueError):
            orthogonality_residual(np.ones((2, 3)))


class TestHaarSampling:
    def test_deterministic(self):
        A = sample_haar_orthogonal(6, seed=123)
        B = sample_haar_orthogonal(6, seed=123)
        assert_array_equal(A, B)
        C = sample_haar_orthogonal(6, seed=124)
        assert not np.array_equal(A, C)

    @pytest.mark.parametrize("m", [1, 2, 3, 10, 40])
    def test_orthogonal(self, m):
        Q = sample_haar_orthogonal(m, seed=m)
        assert orthogonality_residual(Q) <= 1e-13 * m
        assert abs(abs(np.linalg.det(Q)) - 1.0) <= 1e-12 * m

    def test_both_determinant_signs_occur(self):
        dets = {round(float(np.linalg.det(sample_haar_orthogonal(3, seed=s)))) for s in range(20)}
        assert dets == {-1, 1}

    def test_first_moment_vanishes(self):
        # Haar symmetry: entries have mean zero; with 300 samples the mean of
        # a single entry is ~N(0, 1/(3*300)), so 0.08 is a >4-sigma bound.
        vals = [sample_haar_orthogonal(3, seed=s)[0, 0] for s in range(300)]
        assert abs(float(np.mean(vals))) < 0.08

    def test_validation(self):
        with pytest.raises(ValueError):
            sample_haar_orthogonal(0, seed=1)
        with pytest.raises(ValueError):
            sample_haar_orthogonal(3, seed=-1)


class TestBoostMatrix:
    def test_hand_value(self):
        s2 = math.sqrt(2.0)
        assert_array_equal(
            boost_matrix(1.0, 3),
            [[s2, 1.0, 0.0], [1.0, s2, 0.0], [0.0, 0.0, 1.0]],
        )

    def test_zero_alpha_is_identity(self):
        assert_array_equal(boost_matrix(0.0, 5), np.eye(5))

    @pytest.mark.parametrize("alpha", [0.0, 0.5, 1.0, 10.0, 1e4])
    @pytest.mark.parametrize("n", [2, 3, 8])
    def test_preserves_indefinite_form(self, alpha, n):
        T = boost_matrix(alpha, n)
        J = signature_matrix(n)
        defect = np.linalg.norm(T.T @ J @ T - J)
        assert defect <= 1e-9 * (1.0 + alpha * alpha)

    def test_validation(self):
        with pytest.raises(ValueError):
            boost_matrix(-1.0, 3)
        with pytest.raises(ValueError):
            boost_matrix(np.inf, 3)
        with pytest.raises(ValueError):
            boost_matrix(1.0, 1)
