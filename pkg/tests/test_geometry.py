import math

import numpy as np
import pytest

from quadrics import (
    HomogeneousDirection,
    HomogeneousPoint,
    Mat3,
    Mat4,
    Vec3,
    compose,
    cross,
    cross_matrix,
    mat_vec,
    to_euclidean,
    translation,
    transpose,
)


class TestCross:
    def test_basis_vectors(self):
        assert cross(Vec3(1, 0, 0), Vec3(0, 1, 0)) == Vec3(0, 0, 1)

    def test_parallel_vectors(self):
        assert cross(Vec3(2, 3, 4), Vec3(2, 3, 4)) == Vec3(0, 0, 0)

    def test_hand_expansion(self):
        assert cross(Vec3(-1, 0, 0), Vec3(2, 1, 0)) == Vec3(0, 0, -1)

    def test_orthogonality(self):
        rng = np.random.default_rng(42)
        for _ in range(200):
            u = Vec3(*rng.uniform(-10, 10, size=3))
            v = Vec3(*rng.uniform(-10, 10, size=3))
            c = cross(u, v)
            tol_u = 1e-12 * u.norm() * u.norm() * v.norm()
            tol_v = 1e-12 * u.norm() * v.norm() * v.norm()
            assert abs(c.dot(u)) <= tol_u
            assert abs(c.dot(v)) <= tol_v


class TestCrossMatrix:
    def test_zero_vector(self):
        assert cross_matrix(Vec3(0, 0, 0)).m == (0.0,) * 9

    def test_entry_pattern(self):
        k = cross_matrix(Vec3(1, 2, 3))
        assert k.m == (0.0, -3.0, 2.0, 3.0, 0.0, -1.0, -2.0, 1.0, 0.0)

    def test_exact_antisymmetry(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            k = cross_matrix(Vec3(*rng.uniform(-5, 5, size=3)))
            for i in range(3):
                assert k.at(i, i) == 0.0
                for j in range(3):
                    assert k.at(i, j) == -k.at(j, i)

    def test_matches_cross_product_exactly(self):
        rng = np.random.default_rng(42)
        for _ in range(100):
            w = Vec3(*rng.uniform(-10, 10, size=3))
            v = Vec3(*rng.uniform(-10, 10, size=3))
            assert cross_matrix(w).apply(v) == cross(w, v)


class TestTranslation:
    def test_zero_is_identity(self):
        assert translation(Vec3(0, 0, 0)) == Mat4.identity()

    def test_center_maps_to_origin(self):
        t = translation(Vec3(1, 2, 3))
        assert mat_vec(t, (1.0, 2.0, 3.0, 1.0)) == (0.0, 0.0, 0.0, 1.0)

    def test_directions_unaffected(self):
        t = translation(Vec3(5, 0, 0))
        assert mat_vec(t, (1.0, 0.0, 0.0, 0.0)) == (1.0, 0.0, 0.0, 0.0)

    def test_inverse_composition_exact(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            c = Vec3(*rng.uniform(-1e3, 1e3, size=3))
            assert compose(translation(c), translation(-c)).m == Mat4.identity().m


class TestMatrixAlgebra:
    def test_compose_identity(self):
        rng = np.random.default_rng(5)
        a = Mat4(tuple(rng.uniform(-2, 2, size=16)))
        assert compose(Mat4.identity(), a) == a
        assert compose(a, Mat4.identity()) == a

    def test_transpose_involution(self):
        rng = np.random.default_rng(6)
        a = Mat4(tuple(rng.uniform(-2, 2, size=16)))
        assert transpose(transpose(a)) == a

    def test_mat_vec_matches_naive_loop(self):
        rng = np.random.default_rng(8)
        for _ in range(100):
            a = Mat4(tuple(rng.uniform(-3, 3, size=16)))
            v = tuple(rng.uniform(-3, 3, size=4))
            expected = []
            for i in range(4):
                acc = 0.0
                for j in range(4):
                    acc += a.at(i, j) * v[j]
                expected.append(acc)
            assert mat_vec(a, v) == tuple(expected)

    def test_mat_vec_rejects_wrong_length(self):
        with pytest.raises(ValueError):
            mat_vec(Mat4.identity(), (1.0, 2.0, 3.0))


class TestToEuclidean:
    @pytest.mark.parametrize(
        "point,expected",
        [
            (HomogeneousPoint(2, 4, 6, 2), Vec3(1, 2, 3)),
            (HomogeneousPoint(1, 2, 3, 1), Vec3(1, 2, 3)),
            (HomogeneousPoint(-3, 0, 0, -1), Vec3(3, 0, 0)),
        ],
    )
    def test_examples(self, point, expected):
        assert to_euclidean(point) == expected

    def test_power_of_two_scaling_exact(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            x, y, z = rng.uniform(-10, 10, size=3)
            w = rng.uniform(0.5, 2.0)
            p = HomogeneousPoint(x, y, z, w)
            for k in (-3, 2, 10):
                lam = 2.0 ** k
                scaled = HomogeneousPoint(lam * x, lam * y, lam * z, lam * w)
                assert to_euclidean(scaled) == to_euclidean(p)

    def test_general_scaling_close(self):
        rng = np.random.default_rng(12)
        for _ in range(50):
            x, y, z = rng.uniform(-10, 10, size=3)
            w = rng.uniform(0.5, 2.0)
            lam = rng.uniform(0.1, 7.0)
            a = to_euclidean(HomogeneousPoint(x, y, z, w))
            b = to_euclidean(HomogeneousPoint(lam * x, lam * y, lam * z, lam * w))
            for got, want in zip(b.as_tuple(), a.as_tuple()):
                assert abs(got - want) <= 1e-14 * max(1.0, abs(want))


class TestConstructorValidation:
    @pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
    def test_vec3_rejects_non_finite(self, bad):
        with pytest.raises(ValueError):
            Vec3(1.0, bad, 0.0)

    def test_point_rejects_w_zero(self):
        with pytest.raises(ValueError, match="infinity"):
            HomogeneousPoint(1.0, 2.0, 3.0, 0.0)

    def test_point_rejects_non_finite(self):
        with pytest.raises(ValueError):
            HomogeneousPoint(math.nan, 0.0, 0.0, 1.0)

    def test_direction_rejects_all_zero(self):
        with pytest.raises(ValueError):
            HomogeneousDirection(0.0, 0.0, 0.0, 0.0)

    def test_direction_allows_pure_w(self):
        d = HomogeneousDirection(0.0, 0.0, 0.0, 1.0)
        assert d.sw == 1.0

    def test_mat_sizes(self):
        with pytest.raises(ValueError):
            Mat3((1.0, 2.0))
        with pytest.raises(ValueError):
            Mat4((1.0,) * 15)

    def test_mat_rejects_non_finite(self):
        with pytest.raises(ValueError):
            Mat4((math.inf,) + (0.0,) * 15)

    def test_normalize_zero_vector(self):
        with pytest.raises(ValueError):
            Vec3(0, 0, 0).normalized()
