"""
Tests for order and origin selection
"""

import logging
import math

import numpy as np
import pytest
from scipy.special import ive

from estimators.sample import AngleSample, default_grid
from kernelmath.fejer import wrap_angle
from models.distributions import VonMises, WrappedNormal
from models.functionals import theoretical_origin, theta1_from_coeffs
from models.generator import RngStream, sample
from selection.bandwidth import (BandwidthTarget, Theta1Method, cdf_order_from_constant, default_truncation,
                                 fit_von_mises, m_opt_cdf, m_opt_cdf_from_model, m_opt_classical_wl,
                                 m_opt_density, nearest_order, theta1_nonparametric, theta1_parametric_vm,
                                 von_mises_theta1)
from selection.origin import criterion_cn, criterion_profile, select_origin
from utils.exceptions import ConfigurationError, DegenerateSampleError


def _theta1(model):
    return theta1_from_coeffs(model.fourier_coeffs())


class TestVonMisesFit:
    def test_recovers_parameters(self):
        drawn = sample(VonMises(1.0, 3.0), 20000, RngStream(2, 0))
        mu, kappa = fit_von_mises(drawn)
        assert mu == pytest.approx(1.0, abs=0.03)
        assert kappa == pytest.approx(3.0, rel=0.05)

    def test_degenerate_samples(self):
        with pytest.raises(DegenerateSampleError):
            fit_von_mises(AngleSample([0.4]))
        with pytest.raises(DegenerateSampleError):
            fit_von_mises(AngleSample([0.4, 0.4, 0.4]))

    def test_balanced_sample_is_uniform(self):
        _, kappa = fit_von_mises(AngleSample([0.0, math.pi / 2, -math.pi, -math.pi / 2]))
        assert kappa == 0.0
        assert von_mises_theta1(0.0) == 0.0

    def test_quadrature_matches_closed_form(self):
        for kappa in (0.5, 2.0, 400.0):
            closed = kappa * ive(1, 2 * kappa) / (4 * math.pi * ive(0, kappa) ** 2)
            assert von_mises_theta1(kappa) == pytest.approx(closed, rel=1e-6)

    def test_large_concentration_flagged(self, caplog):
        caplog.set_level(logging.WARNING, logger="fejer")
        estimate = theta1_parametric_vm(AngleSample(np.linspace(-0.01, 0.01, 50)))
        assert estimate.kappa_hat > 500
        assert "large-kappa" in estimate.flags
        assert "exceeds" in caplog.text


class TestNonparametricTheta1:
    def test_default_truncation(self):
        assert default_truncation(500) == 9
        assert default_truncation(50) == 5

    def test_biased_and_unbiased_are_linked(self, vm_sample):
        n = len(vm_sample)
        biased = theta1_nonparametric(vm_sample, M=3)
        unbiased = theta1_nonparametric(vm_sample, M=3, unbiased=True)
        offset = sum(k * k for k in range(1, 4)) / math.pi
        assert biased.method is Theta1Method.NONPARAMETRIC_BIASED
        assert unbiased.method is Theta1Method.NONPARAMETRIC_UNBIASED
        assert unbiased.value == pytest.approx((n * biased.value - offset) / (n - 1), rel=1e-12)

    def test_unbiased_on_average(self):
        model = VonMises(0.0, 2.0)
        coeffs = model.fourier_coeffs(3)
        truth = float(np.sum(np.arange(1, 4) ** 2 * coeffs.magnitudes_squared())) / math.pi
        values = [theta1_nonparametric(sample(model, 50, RngStream(4, r)), M=3, unbiased=True).value
                  for r in range(400)]
        assert np.mean(values) == pytest.approx(truth, rel=0.1)

    @pytest.mark.slow
    def test_plug_in_order_approaches_optimal(self):
        model = VonMises(0.0, 2.0)
        ratios = []
        for n in (100, 1000, 10000):
            optimal = m_opt_density(_theta1(model), n).m_real
            estimates = [theta1_nonparametric(sample(model, n, RngStream(21, r)), unbiased=True) for r in range(20)]
            plug_in = [m_opt_density(estimate, n).m_real for estimate in estimates]
            ratios.append(np.mean(plug_in) / optimal)
        assert 0.9 <= ratios[-1] <= 1.1
        assert abs(ratios[-1] - 1.0) < abs(ratios[0] - 1.0)

    def test_negative_unbiased_value_clamped(self):
        estimate = theta1_nonparametric(AngleSample([0.0, math.pi]), M=1, unbiased=True)
        assert estimate.value == 0.0
        assert estimate.flags == ("clamped",)

    def test_truncation_validation(self, vm_sample):
        with pytest.raises(ValueError):
            theta1_nonparametric(vm_sample, M=0)


class TestDensityOrder:
    @pytest.mark.parametrize("model,n,expected", [
        (WrappedNormal(0.0, 0.75), 50, 6.73),
        (WrappedNormal(0.0, 0.9), 50, 11.1),
        (WrappedNormal(0.0, 0.75), 200, 10.7),
        (WrappedNormal(0.0, 0.9), 200, 17.6),
    ])
    def test_theoretical_orders(self, model, n, expected):
        result = m_opt_density(_theta1(model), n)
        assert result.target is BandwidthTarget.DENSITY
        assert result.m_real == pytest.approx(expected, rel=0.01)
        assert result.m == nearest_order(result.m_real)

    def test_scaling_in_n(self):
        assert m_opt_density(0.3, 800).m_real == pytest.approx(2 * m_opt_density(0.3, 100).m_real)

    def test_monotone(self):
        orders = [m_opt_density(theta1, n).m for theta1 in (0.1, 0.5) for n in (10, 100, 1000)]
        assert orders[:3] == sorted(orders[:3])
        assert all(a <= b for a, b in zip(orders[:3], orders[3:]))

    def test_flat_density_gives_order_one(self):
        result = m_opt_density(0.0, 100)
        assert result.m == 1
        assert result.flags == ("uniform",)

    def test_nearest_order(self):
        assert nearest_order(2.5) == 3
        assert nearest_order(2.49) == 2
        assert nearest_order(0.2) == 1


class TestClassicalOrder:
    def test_theoretical_order(self):
        result = m_opt_classical_wl(_theta1(WrappedNormal(0.0, 0.75)), 50, 0.2)
        assert result.m_real == pytest.approx(7.50, rel=0.01)
        assert result.auxiliary["rho"] == 0.2

    def test_rho_validation(self):
        with pytest.raises(ConfigurationError):
            m_opt_classical_wl(0.3, 50, 0.0)


class TestCdfOrder:
    def test_root_of_order_equation(self):
        c, n = 0.05, 400
        m = cdf_order_from_constant(c, n)
        assert m * (math.log(m) - 1) == pytest.approx(c * n, rel=1e-10)
        assert cdf_order_from_constant(0.001, 100) is None

    @pytest.mark.parametrize("model,n,expected", [
        (VonMises(0.0, 5.0), 50, 29.3),
        (VonMises(0.0, 5.0), 200, 82.0),
        (VonMises(math.pi / 2, 5.0), 50, 38.0),
        (VonMises(math.pi, 5.0), 50, 9.03),
    ])
    def test_theoretical_orders_at_minus_pi(self, model, n, expected):
        result = m_opt_cdf_from_model(model, n, -math.pi)
        assert result.target is BandwidthTarget.CDF
        assert result.m_real == pytest.approx(expected, rel=0.02)

    def test_small_constant_flagged(self):
        result = m_opt_cdf_from_model(VonMises(0.0, 0.01), 5, -math.pi)
        assert result.m == 1
        assert "small-constant" in result.flags

    def test_fitted_order_close_to_theory(self):
        model = VonMises(0.0, 5.0)
        drawn = sample(model, 2000, RngStream(6, 0))
        fitted = m_opt_cdf(drawn, origin=-math.pi)
        assert fitted.m_real == pytest.approx(m_opt_cdf_from_model(model, 2000, -math.pi).m_real, rel=0.15)


class TestOrigin:
    def test_criterion_of_two_points(self):
        two = AngleSample([-math.pi / 2, math.pi / 2])
        assert criterion_cn(two, -math.pi) == pytest.approx(math.pi / 4)
        assert criterion_cn(two, 0.0) == pytest.approx(math.pi / 4)

    def test_criterion_constant_between_observations(self, vm_sample):
        angles = np.sort(vm_sample.angles)
        low, high = angles[10], angles[11]
        inside = np.linspace(low, high, 5)[1:-1]
        values = [criterion_cn(vm_sample, theta0) for theta0 in inside]
        assert values == pytest.approx([values[0]] * 3, abs=1e-14)

    def test_tie_broken_toward_smallest_midpoint(self):
        chosen = select_origin(AngleSample([-math.pi / 2, math.pi / 2]))
        assert chosen.theta0 == pytest.approx(-math.pi)
        assert chosen.ties == 2
        assert chosen.criterion_min == pytest.approx(math.pi / 4)

    def test_selected_origin_minimizes_profile(self, vm_sample):
        chosen = select_origin(vm_sample)
        profile = criterion_profile(vm_sample, default_grid(3600))
        assert profile.min() >= chosen.criterion_min - 1e-12
        assert profile.max() <= chosen.criterion_max + 1e-12
        assert criterion_cn(vm_sample, chosen.theta0) == pytest.approx(chosen.criterion_min, abs=1e-14)
        start, end = chosen.minimizing_arc
        assert start < end

    def test_rotation_equivariance(self, vm_sample):
        base = select_origin(vm_sample)
        for delta in np.linspace(-math.pi, math.pi, 200, endpoint=False):
            rotated = select_origin(vm_sample.rotated(delta))
            assert abs(wrap_angle(rotated.theta0 - base.theta0 - delta)) < 1e-12
            assert rotated.criterion_min == pytest.approx(base.criterion_min, abs=1e-12)

    def test_needs_two_observations(self):
        with pytest.raises(DegenerateSampleError):
            select_origin(AngleSample([1.0]))
        with pytest.raises(DegenerateSampleError):
            criterion_cn(AngleSample([1.0]), 0.0)

    @pytest.mark.slow
    def test_empirical_criterion_tracks_theory(self):
        model = VonMises(math.pi / 2, 2.0)
        chosen = select_origin(sample(model, 2000, RngStream(8, 0)))
        theta0, lowest = theoretical_origin(model)
        assert chosen.criterion_min == pytest.approx(lowest, abs=0.05)
        assert chosen.theta0 == pytest.approx(theta0, abs=0.5)
