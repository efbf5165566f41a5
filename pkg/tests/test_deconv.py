"""
Tests for error laws and the Berkson and classical estimators
"""

import math

import numpy as np
import pytest
from scipy.special import ive

from deconv.error_models import ConvolvedModel, ErrorKind, ErrorModel, convolve_model, sample_errors
from deconv.estimators import berkson_estimate, check_feasible, classical_estimate
from estimators.density import density_estimate
from estimators.sample import AngleSample, default_grid, periodic_trapezoid
from models.distributions import VonMises, WrappedNormal
from models.generator import RngStream, sample
from utils.exceptions import ConfigurationError, InfeasibleDeconvolutionError


class TestErrorModel:
    def test_laplace_coefficients(self):
        assert ErrorModel.wrapped_laplace(0.2).lambdas(2) == pytest.approx([0.04 / 1.04, 0.04 / 4.04])

    def test_laplace_scale_reading(self):
        err = ErrorModel.wrapped_laplace_scale(0.2)
        assert err.kind is ErrorKind.WRAPPED_LAPLACE
        assert err.parameter == pytest.approx(5.0)
        assert err.lambdas(1)[0] == pytest.approx(1 / 1.04)

    def test_uniform_coefficients(self):
        a = math.pi / 12
        lambdas = ErrorModel.wrapped_uniform(a).lambdas(12)
        assert lambdas[0] == pytest.approx(math.sin(a) / a)
        assert abs(lambdas[11]) < 1e-10

    def test_von_mises_coefficients(self):
        assert ErrorModel.von_mises(3.0).lambdas(2) == pytest.approx([ive(1, 3.0) / ive(0, 3.0),
                                                                       ive(2, 3.0) / ive(0, 3.0)])
        assert ErrorModel.von_mises(0.0).lambdas(3) == pytest.approx([0.0, 0.0, 0.0])

    def test_no_error_is_identity(self):
        err = ErrorModel.none()
        assert err.is_none
        assert err.lambdas(4) == pytest.approx(np.ones(4))
        assert str(err) == "none"

    def test_labels(self):
        assert str(ErrorModel.wrapped_laplace(0.2)) == "WL(0.2)"
        assert str(ErrorModel.von_mises(5)) == "VM(5)"

    def test_parameter_validation(self):
        with pytest.raises(ConfigurationError):
            ErrorModel.wrapped_laplace(0.0)
        with pytest.raises(ConfigurationError):
            ErrorModel.wrapped_uniform(4.0)
        with pytest.raises(ConfigurationError):
            ErrorModel.von_mises(-1.0)
        with pytest.raises(ConfigurationError):
            ErrorModel.wrapped_laplace_scale(-0.2)


class TestErrorSampling:
    def test_laplace_characteristic_function(self):
        errors = sample_errors(ErrorModel.wrapped_laplace(2.0), 20000, RngStream(1, 0))
        assert np.mean(np.cos(errors)) == pytest.approx(0.8, abs=0.02)
        assert np.var(errors) == pytest.approx(0.5, rel=0.08)

    def test_uniform_bounds(self):
        errors = sample_errors(ErrorModel.wrapped_uniform(0.3), 1000, RngStream(1, 1))
        assert np.all(np.abs(errors) <= 0.3)

    def test_no_error_draws_zeros(self):
        assert np.all(sample_errors(ErrorModel.none(), 5, RngStream(1, 2)) == 0.0)


class TestConvolution:
    def test_coefficient_round_trip(self):
        coeffs = WrappedNormal(0.4, 0.8).fourier_coeffs(10)
        err = ErrorModel.wrapped_laplace(1.5)
        recovered = convolve_model(coeffs, err).scaled(1.0 / err.lambdas(10))
        assert recovered.a == pytest.approx(coeffs.a, abs=1e-14)
        assert recovered.b == pytest.approx(coeffs.b, abs=1e-14)

    def test_convolved_model(self):
        base = VonMises(0.0, 4.0)
        err = ErrorModel.wrapped_uniform(math.pi / 12)
        convolved = convolve_model(base, err)
        assert isinstance(convolved, ConvolvedModel)
        assert convolve_model(base, ErrorModel.none()) is base
        grid = default_grid(256)
        assert periodic_trapezoid(convolved.density(grid)) == pytest.approx(1.0, abs=1e-12)
        assert convolved.fourier_coeffs().a == pytest.approx(
            base.fourier_coeffs().a * err.lambdas(base.fourier_coeffs().order))

    def test_rejects_other_arguments(self):
        with pytest.raises(TypeError):
            convolve_model([0.1, 0.2], ErrorModel.none())


class TestEstimators:
    def test_reduce_to_density_without_error(self, vm_sample):
        grid = default_grid(64)
        plain = density_estimate(vm_sample, 9, grid).values
        assert berkson_estimate(vm_sample, 9, grid=grid).values == pytest.approx(plain, abs=1e-14)
        assert classical_estimate(vm_sample, 9, grid=grid).values == pytest.approx(plain, abs=1e-14)

    def test_single_point_with_unit_laplace_rate(self):
        grid = default_grid(16)
        err = ErrorModel.wrapped_laplace(1.0)
        # w(1) = 1/2 and λ(1) = 1/2
        berkson = berkson_estimate(AngleSample([0.0]), 1, err, grid)
        assert berkson.values == pytest.approx((1 + np.cos(grid) / 2) / (2 * math.pi), abs=1e-14)
        classical = classical_estimate(AngleSample([0.0]), 1, err, grid, report=False)
        assert classical.values == pytest.approx((1 + 2 * np.cos(grid)) / (2 * math.pi), abs=1e-14)

    def test_berkson_keeps_unit_mass(self, vm_sample):
        estimate = berkson_estimate(vm_sample, 20, ErrorModel.wrapped_uniform(math.pi / 12))
        assert periodic_trapezoid(estimate.values) == pytest.approx(1.0, abs=1e-12)

    def test_classical_undoes_smoothing_on_average(self):
        # E[â_l] = λ(l)·a_l, so dividing by λ centres the coefficients on the clean law
        model = VonMises(0.0, 2.0)
        err = ErrorModel.wrapped_laplace(3.0)
        grid = np.array([0.0])
        values = []
        for r in range(300):
            clean = sample(model, 200, RngStream(12, r))
            noisy = AngleSample(clean.angles + sample_errors(err, 200, RngStream(13, r)))
            values.append(classical_estimate(noisy, 3, err, grid, report=False).values[0])
        weights = 1.0 - np.arange(1, 4) / 4.0
        expected = (1 + 2 * np.sum(weights * model.fourier_coeffs(3).a)) / (2 * math.pi)
        assert np.mean(values) == pytest.approx(expected, rel=0.03)

    def test_negative_values_reported_and_clipped(self, vm_sample):
        err = ErrorModel.wrapped_laplace(0.2)
        raw = classical_estimate(vm_sample, 10, err, report=False)
        assert raw.negative_mass > 0.0
        assert "negative" in raw.flags
        clipped = classical_estimate(vm_sample, 10, err, clip=True, report=False)
        assert clipped.min_value >= 0.0
        assert "clipped" in clipped.flags
        assert periodic_trapezoid(clipped.values) == pytest.approx(1.0, abs=1e-2)

    def test_vanishing_coefficient_is_infeasible(self, vm_sample):
        err = ErrorModel.wrapped_uniform(math.pi / 12)
        with pytest.raises(InfeasibleDeconvolutionError) as info:
            classical_estimate(vm_sample, 12, err)
        assert info.value.frequency == 12
        assert info.value.exit_code == 2
        assert check_feasible(err, 11).shape == (11,)
