"""
Integrated squared error, Monte Carlo MISE and exact risk of Fourier estimators
"""

import math

import numpy as np

from estimators.cdf import arc_offset
from estimators.sample import EstimateKind, periodic_trapezoid
from kernelmath.fejer import TWO_PI, check_order, fejer_weights
from models.distributions import CircularModel
from models.functionals import true_cdf
from utils.exceptions import ConfigurationError


def ise(estimate, truth):
    """
    Integrated squared error of an estimate on a uniform grid.

    Densities integrate over the period; CDFs over the arc [θ₀, θ₀ + 2π], where both
    functions are 0 at the start and 1 at the end.

    Args:
        estimate: EstimateGrid
        truth: CircularModel, or an array of true values on the estimate grid

    Returns:
        ISE ≥ 0
    """
    if not estimate.is_uniform():
        raise ConfigurationError("ISE needs an equispaced grid over one period")
    if isinstance(truth, CircularModel):
        if estimate.kind is EstimateKind.CDF:
            truth = true_cdf(truth, estimate.theta, origin=estimate.origin)
        else:
            truth = truth.density(estimate.theta)
    squared = (np.asarray(estimate.values) - np.asarray(truth)) ** 2

    if estimate.kind is EstimateKind.DENSITY:
        return periodic_trapezoid(squared)

    offsets = arc_offset(estimate.theta, estimate.origin)
    # a whole turn past the origin is the arc end; fold it back onto the start, where the error is 0
    offsets = np.where(offsets >= TWO_PI, 0.0, offsets)
    order = np.argsort(offsets, kind="stable")
    nodes = np.concatenate(([0.0], offsets[order], [TWO_PI]))
    errors = np.concatenate(([0.0], squared[order], [0.0]))
    return float(np.trapezoid(errors, x=nodes))


class MiseAccumulator:
    """Streaming mean and spread of ISE values, fed in replication order"""
    def __init__(self):
        self.count = 0
        self.mean = 0.0
        self._m2 = 0.0

    def add(self, value):
        self.count += 1
        delta = value - self.mean
        self.mean += delta / self.count
        self._m2 += delta * (value - self.mean)

    @property
    def standard_error(self):
        if self.count < 2:
            return math.nan
        return math.sqrt(self._m2 / (self.count - 1) / self.count)


def mise_accumulate(values):
    """MISE of a sequence of ISE values."""
    accumulator = MiseAccumulator()
    for value in values:
        accumulator.add(value)
    return accumulator.mean


def _padded(coeffs, order):
    return coeffs.padded(order)


def mise_exact(transfer, observed, target, n):
    """
    Exact MISE of the linear estimator with coefficients t_k·φ̂_k.

    (1/π) Σ_k [ |t_k φ*_k - φ_k|² + t_k² (1 - |φ*_k|²)/n ]

    Args:
        transfer: Multipliers t_k for k = 1..len(transfer); zero beyond
        observed: FourierCoefficients of the sampled law
        target: FourierCoefficients of the estimated density
        n: Sample size

    Returns:
        MISE
    """
    order = max(len(transfer), observed.order, target.order)
    t = np.zeros(order)
    t[:len(transfer)] = transfer
    seen = _padded(observed, order)
    aim = _padded(target, order)
    bias = (t * seen.a - aim.a) ** 2 + (t * seen.b - aim.b) ** 2
    variance = t ** 2 * (1.0 - seen.magnitudes_squared()) / n
    return float(np.sum(bias + variance)) / np.pi


def isb_exact(model, m):
    """
    Integrated squared bias of the Fejér estimator.

    (1/π) Σ (1 - γ_k(m))² (a_k² + b_k²) with γ_k(m) = 1 - k/(m+1) for k ≤ m and 0 beyond.
    """
    m = check_order(m)
    coeffs = model.fourier_coeffs()
    coeffs = _padded(coeffs, max(m, coeffs.order))
    shortfall = np.ones(coeffs.order)
    shortfall[:m] = 1.0 - fejer_weights(m)
    return float(np.sum(shortfall ** 2 * coeffs.magnitudes_squared())) / np.pi


def iv_exact(model, m, n):
    """Integrated variance (1/(πn)) Σ_{k≤m} w_k² (1 - |φ_k|²)."""
    m = check_order(m)
    coeffs = _padded(model.fourier_coeffs(), m)
    weights = fejer_weights(m)
    return float(np.sum(weights ** 2 * (1.0 - coeffs.magnitudes_squared()))) / (np.pi * n)


def density_amise(theta1, m, n):
    """m/(3πn) + θ₁/(m+1)²."""
    return m / (3.0 * np.pi * n) + theta1 / (m + 1) ** 2


def cdf_amise(variance_constant, theta2, density_at_origin, m, n):
    """C(F^{θ₀})/n - 2 log m (1 + 2πF′(θ₀))/(πmn) + θ₂/m²."""
    spread = 1.0 + TWO_PI * density_at_origin
    return variance_constant / n - 2.0 * math.log(m) * spread / (np.pi * m * n) + theta2 / m ** 2


def classical_wl_amise(theta1, m, n, rho):
    """
    θ₁/m² + (1/(2πn))(1 + 2ρ⁴m⁵/105) for wrapped Laplace error of scale ρ, λ(l) = 1/(1 + ρ²l²).

    Minimized at m = (42πθ₁n/ρ⁴)^{1/7}.
    """
    return theta1 / m ** 2 + (1.0 + 2.0 * rho ** 4 * m ** 5 / 105.0) / (TWO_PI * n)


# at m + 1 = (6πθ₁n)^{1/3}, density_amise + 1/(3πn) equals OPTIMAL_AMISE_CONSTANT · θ₁^{1/3} · n^{-2/3}
OPTIMAL_AMISE_CONSTANT = 3.0 * (6.0 * math.pi) ** (-2.0 / 3.0)
