"""Unit tests for disk geometry: Mobius transforms, metric, pseudo-disks."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from diskinterp import (
    PointSetError,
    mobius_transform,
    pseudo_disk_euclidean,
    pseudohyperbolic_distance,
    sample_pseudo_circle,
)

interior = st.complex_numbers(max_magnitude=0.9, allow_nan=False, allow_infinity=False)
angles = st.floats(min_value=0.0, max_value=2 * np.pi, allow_nan=False)


class TestMobiusTransform:
    def test_fixed_point_maps_to_zero(self):
        assert mobius_transform(0.5, 0.5) == 0.0

    def test_zero_parameter_is_identity(self):
        assert mobius_transform(0.0, 0.3 + 0.4j) == 0.3 + 0.4j

    def test_real_axis_example(self):
        assert mobius_transform(0.5, -0.5) == pytest.approx(-0.8, abs=1e-15)

    def test_matches_direct_formula(self, rng):
        for _ in range(200):
            lam = complex(*rng.uniform(-0.6, 0.6, 2))
            z = complex(*rng.uniform(-0.6, 0.6, 2))
            assert mobius_transform(lam, z) == pytest.approx(
                oracles.mobius(lam, z), abs=1e-14
            )

    def test_interior_argument_stays_interior(self, rng):
        for _ in range(100):
            lam = complex(*rng.uniform(-0.6, 0.6, 2))
            z = complex(*rng.uniform(-0.6, 0.6, 2))
            assert abs(mobius_transform(lam, z)) < 1.0

    def test_rejects_exterior_parameter(self):
        with pytest.raises(PointSetError):
            mobius_transform(1.5, 0.0)

    def test_rejects_exterior_argument(self):
        with pytest.raises(PointSetError):
            mobius_transform(0.5, 2.0)

    def test_vectorized_matches_scalar(self):
        zs = np.array([0.1, 0.2 + 0.3j, -0.5j])
        out = mobius_transform(0.4, zs)
        for z, w in zip(zs, out):
            assert w == mobius_transform(0.4, complex(z))

    @given(lam=interior, theta=angles)
    def test_unimodular_on_boundary(self, lam, theta):
        w = mobius_transform(lam, np.exp(1j * theta))
        assert abs(abs(w) - 1.0) < 1e-12


class TestPseudohyperbolicDistance:
    def test_distance_from_origin_is_modulus(self):
        assert pseudohyperbolic_distance(0.3 + 0.4j, 0.0) == pytest.approx(0.5)

    def test_real_pair_example(self):
        assert pseudohyperbolic_distance(0.5, -0.5) == pytest.approx(0.8, abs=1e-15)

    def test_zero_on_diagonal(self):
        assert pseudohyperbolic_distance(0.3 + 0.1j, 0.3 + 0.1j) == 0.0

    @given(z=interior, w=interior)
    def test_symmetry_is_exact(self, z, w):
        assert pseudohyperbolic_distance(z, w) == pseudohyperbolic_distance(w, z)

    @given(z=interior, w=interior)
    def test_range(self, z, w):
        d = pseudohyperbolic_distance(z, w)
        assert 0.0 <= d < 1.0

    @given(x=interior, y=interior, z=interior)
    def test_triangle_inequality(self, x, y, z):
        d1 = pseudohyperbolic_distance(x, y)
        d2 = pseudohyperbolic_distance(y, z)
        bound = (d1 + d2) / (1.0 + d1 * d2)
        assert pseudohyperbolic_distance(x, z) <= bound + 1e-12

    @given(a=interior, z=interior, w=interior)
    def test_mobius_invariance(self, a, z, w):
        za, wa = mobius_transform(a, z), mobius_transform(a, w)
        assert pseudohyperbolic_distance(za, wa) == pytest.approx(
            pseudohyperbolic_distance(z, w), abs=1e-12
        )


class TestPseudoDisk:
    def test_centered_disk(self):
        disk = pseudo_disk_euclidean(0.0, 0.3)
        assert disk.euclid_center == 0.0
        assert disk.euclid_radius == pytest.approx(0.3)

    def test_shifted_disk(self):
        disk = pseudo_disk_euclidean(0.5, 0.5)
        assert disk.euclid_center == pytest.approx(0.4)
        assert disk.euclid_radius == pytest.approx(0.4)

    def test_real_axis_extremes_have_distance_delta(self):
        # The circle around center 0.4 with radius 0.4 crosses the axis at
        # 0.8 and 0.0; both sit at pseudohyperbolic distance 0.5 from 0.5.
        for z in (0.8, 0.0):
            assert pseudohyperbolic_distance(z, 0.5) == pytest.approx(0.5, abs=1e-12)

    def test_sampled_circle_point(self):
        assert abs(mobius_transform(0.5, 0.4 + 0.4j)) == pytest.approx(0.5, abs=1e-12)

    def test_rejects_bad_delta(self):
        with pytest.raises(ValueError):
            pseudo_disk_euclidean(0.5, 1.5)
        with pytest.raises(ValueError):
            pseudo_disk_euclidean(0.5, 0.0)

    @given(lam=interior, delta=st.floats(min_value=0.05, max_value=0.95), z=interior)
    def test_membership_consistency(self, lam, delta, z):
        # Euclidean membership must agree with the defining sublevel set,
        # except within a thin band around the boundary circle.
        disk = pseudo_disk_euclidean(lam, delta)
        d = pseudohyperbolic_distance(z, lam)
        if abs(d - delta) <= 1e-10:
            return
        assert bool(disk.contains(z)) == (d < delta)


class TestSamplePseudoCircle:
    def test_centered_square(self):
        pts = sample_pseudo_circle(0.0, 0.3, 4)
        expected = np.array([0.3, 0.3j, -0.3, -0.3j])
        assert np.allclose(pts, expected, atol=1e-15)

    def test_real_axis_extremes(self):
        pts = sample_pseudo_circle(0.5, 0.5, 2)
        assert np.allclose(sorted(pts.real), [0.0, 0.8], atol=1e-15)
        assert np.allclose(pts.imag, 0.0, atol=1e-15)

    def test_rejects_nonpositive_count(self):
        with pytest.raises(ValueError):
            sample_pseudo_circle(0.5, 0.5, 0)

    @settings(max_examples=50)
    @given(
        lam=interior,
        delta=st.floats(min_value=0.05, max_value=0.95),
        m=st.integers(min_value=8, max_value=64),
    )
    def test_samples_lie_on_pseudo_circle(self, lam, delta, m):
        pts = sample_pseudo_circle(lam, delta, m)
        assert len(pts) == m
        dist = pseudohyperbolic_distance(pts, lam)
        assert np.max(np.abs(dist - delta)) < 1e-10
