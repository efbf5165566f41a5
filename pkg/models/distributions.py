"""
Reference circular distributions
"""

from dataclasses import dataclass

import numpy as np
from scipy.special import ive

from estimators.density import evaluate_series
from kernelmath.fejer import TWO_PI, wrap_angle
from utils.config import FOURIER_MAX_TERMS, FOURIER_TOLERANCE
from utils.exceptions import ConfigurationError


@dataclass(frozen=True)
class FourierCoefficients:
    """Cosine and sine coefficients a_k = ∫f cos kθ, b_k = ∫f sin kθ for k = 1..order"""
    a: np.ndarray
    b: np.ndarray

    @property
    def order(self):
        return len(self.a)

    def padded(self, order):
        """Coefficients truncated or zero-extended to exactly `order` terms."""
        a = np.zeros(order)
        b = np.zeros(order)
        keep = min(order, self.order)
        a[:keep] = self.a[:keep]
        b[:keep] = self.b[:keep]
        return FourierCoefficients(a, b)

    def magnitudes_squared(self):
        return self.a ** 2 + self.b ** 2

    def scaled(self, factors):
        """Coefficientwise product with a real sequence of the same length."""
        return FourierCoefficients(self.a * factors, self.b * factors)


def _truncate(magnitudes):
    """Keep terms up to the last one above the tolerance, at least one."""
    above = np.nonzero(np.abs(magnitudes) >= FOURIER_TOLERANCE)[0]
    keep = int(above[-1]) + 1 if above.size else 1
    return magnitudes[:keep]


def _rotate(magnitudes, mu):
    k = np.arange(1, len(magnitudes) + 1, dtype=float)
    return FourierCoefficients(magnitudes * np.cos(k * mu), magnitudes * np.sin(k * mu))


def _format_angle(value):
    # -π and π are one point; locations are stored wrapped to -π
    for multiple, text in ((0.0, "0"), (0.5, "π/2"), (-0.5, "-π/2"), (1.0, "π"), (-1.0, "π")):
        if abs(value - multiple * np.pi) < 1e-12:
            return text
    return f"{value:g}"


class CircularModel:
    """Base of the reference distributions"""

    def density(self, theta):
        raise NotImplementedError

    def magnitudes(self, order):
        """Coefficient magnitudes |φ_k| for k = 1..order, for the symmetric unimodal families."""
        raise NotImplementedError

    def draw(self, n, generator):
        """Raw angles from a numpy Generator."""
        raise NotImplementedError

    def fourier_coeffs(self, order=None):
        """
        Args:
            order: Exact number of terms; by default truncated where magnitudes drop below 1e-14

        Returns:
            FourierCoefficients
        """
        full = self.magnitudes(FOURIER_MAX_TERMS if order is None else order)
        magnitudes = _truncate(full) if order is None else full
        return _rotate(magnitudes, self.mu)


def _check_location(mu):
    if not np.isfinite(mu):
        raise ConfigurationError(f"location must be finite, got {mu!r}")
    return float(wrap_angle(mu))


def _check_rho(rho):
    if not 0.0 <= rho < 1.0:
        raise ConfigurationError(f"rho must lie in [0, 1), got {rho!r}")
    return float(rho)


@dataclass(frozen=True)
class VonMises(CircularModel):
    mu: float
    kappa: float

    def __post_init__(self):
        if not self.kappa >= 0:
            raise ConfigurationError(f"kappa must be nonnegative, got {self.kappa!r}")
        object.__setattr__(self, "mu", _check_location(self.mu))
        object.__setattr__(self, "kappa", float(self.kappa))

    def __str__(self):
        return f"VM({_format_angle(self.mu)},{self.kappa:g})"

    def density(self, theta):
        theta = np.asarray(theta, dtype=float)
        return np.exp(self.kappa * (np.cos(theta - self.mu) - 1.0)) / (TWO_PI * ive(0, self.kappa))

    def magnitudes(self, order):
        k = np.arange(1, order + 1, dtype=float)
        if self.kappa == 0.0:
            return np.zeros(order)
        return ive(k, self.kappa) / ive(0, self.kappa)

    def draw(self, n, generator):
        # numpy implements the Best–Fisher rejection sampler
        return generator.vonmises(self.mu, self.kappa, size=n)


@dataclass(frozen=True)
class WrappedNormal(CircularModel):
    """Wrapped normal with mean resultant length rho, σ² = -2 log rho"""
    mu: float
    rho: float

    def __post_init__(self):
        object.__setattr__(self, "mu", _check_location(self.mu))
        object.__setattr__(self, "rho", _check_rho(self.rho))

    def __str__(self):
        return f"WN({_format_angle(self.mu)},{self.rho:g})"

    def density(self, theta):
        coeffs = self.fourier_coeffs()
        return evaluate_series(coeffs.a, coeffs.b, np.ones(coeffs.order), theta)

    def magnitudes(self, order):
        if self.rho == 0.0:
            return np.zeros(order)
        k = np.arange(1, order + 1, dtype=float)
        return np.exp(k * k * np.log(self.rho))

    def draw(self, n, generator):
        if self.rho == 0.0:
            return generator.uniform(-np.pi, np.pi, size=n)
        sigma = np.sqrt(-2.0 * np.log(self.rho))
        return self.mu + sigma * generator.standard_normal(n)


@dataclass(frozen=True)
class WrappedCauchy(CircularModel):
    """Wrapped Cauchy with mean resultant length rho"""
    mu: float
    rho: float

    def __post_init__(self):
        object.__setattr__(self, "mu", _check_location(self.mu))
        object.__setattr__(self, "rho", _check_rho(self.rho))

    def __str__(self):
        return f"WC({_format_angle(self.mu)},{self.rho:g})"

    def density(self, theta):
        theta = np.asarray(theta, dtype=float)
        rho = self.rho
        return (1.0 - rho ** 2) / (TWO_PI * (1.0 + rho ** 2 - 2.0 * rho * np.cos(theta - self.mu)))

    def magnitudes(self, order):
        k = np.arange(1, order + 1, dtype=float)
        return self.rho ** k

    def draw(self, n, generator):
        if self.rho == 0.0:
            return generator.uniform(-np.pi, np.pi, size=n)
        return self.mu - np.log(self.rho) * generator.standard_cauchy(n)


@dataclass(frozen=True)
class Uniform(CircularModel):
    mu: float = 0.0

    def __str__(self):
        return "Uniform"

    def density(self, theta):
        return np.full(np.shape(theta), 1.0 / TWO_PI)

    def magnitudes(self, order):
        return np.zeros(order)

    def draw(self, n, generator):
        return generator.uniform(-np.pi, np.pi, size=n)


@dataclass(frozen=True)
class Mixture(CircularModel):
    """p·first + (1 - p)·second"""
    first: CircularModel
    second: CircularModel
    p: float

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ConfigurationError(f"mixture weight must lie in [0, 1], got {self.p!r}")

    def __str__(self):
        return f"Mix({self.first},{self.second},{self.p:g})"

    def density(self, theta):
        return self.p * self.first.density(theta) + (1.0 - self.p) * self.second.density(theta)

    def fourier_coeffs(self, order=None):
        if order is None:
            order = max(self.first.fourier_coeffs().order, self.second.fourier_coeffs().order)
        one = self.first.fourier_coeffs(order)
        two = self.second.fourier_coeffs(order)
        return FourierCoefficients(self.p * one.a + (1 - self.p) * two.a,
                                   self.p * one.b + (1 - self.p) * two.b)

    def draw(self, n, generator):
        if self.p >= 1.0:
            return self.first.draw(n, generator)
        if self.p <= 0.0:
            return self.second.draw(n, generator)
        from_first = self.first.draw(n, generator)
        pick_first = generator.random(n) < self.p
        from_second = self.second.draw(n, generator)
        return np.where(pick_first, from_first, from_second)


def density_from_coeffs(coeffs, grid):
    """Density with the given Fourier coefficients evaluated on a grid."""
    return evaluate_series(coeffs.a, coeffs.b, np.ones(coeffs.order), grid)


def rounded_coefficients(model, step, order):
    """
    Fourier coefficients of the model's observations rounded to the nearest multiple of step.

    Args:
        model: CircularModel of the unrounded observations
        step: Rounding step; 2π/step must be an integer
        order: Number of coefficients

    Returns:
        FourierCoefficients of the discrete rounded law
    """
    from models.functionals import true_cdf

    cells = int(round(TWO_PI / step))
    if abs(cells * step - TWO_PI) > 1e-9:
        raise ConfigurationError(f"rounding step {step!r} does not divide the circle")
    centres = wrap_angle(step * np.arange(cells))
    masses = np.array([
        float(true_cdf(model, c + step / 2.0, origin=float(wrap_angle(c - step / 2.0))))
        for c in centres
    ])
    k = np.arange(1, order + 1, dtype=float)
    phase = np.multiply.outer(k, centres)
    return FourierCoefficients(np.cos(phase) @ masses, np.sin(phase) @ masses)
