"""
Plug-in selection of the Fejér order
"""

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from scipy.integrate import simpson
from scipy.special import ive

from kernelmath.fejer import TWO_PI
from kernelmath.lambert import lambert_w0
from models.distributions import VonMises
from models.functionals import theta2_from_coeffs
from estimators.trig import trig_moments
from utils.config import (CDF_THETA2_TERMS, DEGENERATE_RESULTANT, LARGE_KAPPA,
                          PARAMETRIC_QUADRATURE_POINTS)
from utils.exceptions import ConfigurationError, DegenerateSampleError
from utils.logger import get_logger

logger = get_logger(__name__)

UNIFORM_RESULTANT = 1e-8
NEWTON_MAX_ITERATIONS = 100


class Theta1Method(Enum):
    PARAMETRIC_VON_MISES = "parametric-vm"
    NONPARAMETRIC_BIASED = "nonparametric"
    NONPARAMETRIC_UNBIASED = "nonparametric-unbiased"


class BandwidthTarget(Enum):
    DENSITY = "density"
    CDF = "cdf"
    CLASSICAL_WL = "classical-wl"


@dataclass(frozen=True)
class Theta1Estimate:
    """Estimate of the roughness ∫f′²"""
    value: float
    method: Theta1Method
    M_used: int = None
    kappa_hat: float = None
    mu_hat: float = None
    flags: tuple = ()


@dataclass(frozen=True)
class BandwidthResult:
    """Selected order m with the real-valued optimum it was rounded from"""
    m: int
    m_real: float
    target: BandwidthTarget
    theta_estimate: float
    auxiliary: dict = field(default_factory=dict)
    flags: tuple = ()


def nearest_order(value):
    """Nearest integer, halves rounded up, floored at 1."""
    return max(1, int(math.floor(value + 0.5)))


def _resultant_ratio(kappa):
    return ive(1, kappa) / ive(0, kappa)


def fit_von_mises(sample):
    """
    Maximum likelihood von Mises fit.

    κ̂ solves I₁(κ)/I₀(κ) = R̄ by Newton's method from κ₀ = R̄(2 - R̄²)/(1 - R̄²).

    Args:
        sample: AngleSample with at least two observations

    Returns:
        (μ̂, κ̂)

    Raises:
        DegenerateSampleError: for a single observation or R̄ numerically 1
    """
    if len(sample) < 2:
        raise DegenerateSampleError("a von Mises fit needs at least two observations")
    mu, resultant = sample.mean_resultant()
    if resultant >= 1.0 - DEGENERATE_RESULTANT:
        raise DegenerateSampleError(
            f"mean resultant length {resultant:.15f} leaves the concentration unbounded")
    if resultant < UNIFORM_RESULTANT:
        return mu, 0.0

    kappa = resultant * (2.0 - resultant ** 2) / (1.0 - resultant ** 2)
    for _ in range(NEWTON_MAX_ITERATIONS):
        ratio = _resultant_ratio(kappa)
        slope = 1.0 - ratio / kappa - ratio ** 2
        step = (ratio - resultant) / slope
        updated = kappa - step
        while updated <= 0.0:
            step /= 2.0
            updated = kappa - step
        if abs(updated - kappa) <= 1e-12 * kappa:
            kappa = updated
            break
        kappa = updated
    return mu, float(kappa)


def von_mises_theta1(kappa, points=PARAMETRIC_QUADRATURE_POINTS):
    """
    ∫f′² of a von Mises density, independent of its location.

    Simpson quadrature up to LARGE_KAPPA; beyond it the closed form κ I₁(2κ)/(4π I₀(κ)²).
    """
    if kappa == 0.0:
        return 0.0
    if kappa > LARGE_KAPPA:
        return float(kappa * ive(1, 2.0 * kappa) / (4.0 * np.pi * ive(0, kappa) ** 2))
    theta = np.linspace(-np.pi, np.pi, points + 1)
    density = np.exp(kappa * (np.cos(theta) - 1.0)) / (TWO_PI * ive(0, kappa))
    derivative = -kappa * np.sin(theta) * density
    return float(simpson(derivative ** 2, x=theta))


def theta1_parametric_vm(sample):
    """
    θ₁ of the von Mises density fitted by maximum likelihood.

    Args:
        sample: AngleSample, n ≥ 2

    Returns:
        Theta1Estimate with the fitted location and concentration
    """
    mu, kappa = fit_von_mises(sample)
    flags = ()
    if kappa > LARGE_KAPPA:
        logger.warning(f"fitted concentration {kappa:.4g} exceeds {LARGE_KAPPA:g}; using the closed form")
        flags = ("large-kappa",)
    return Theta1Estimate(von_mises_theta1(kappa), Theta1Method.PARAMETRIC_VON_MISES,
                          kappa_hat=kappa, mu_hat=mu, flags=flags)


def default_truncation(n):
    """M(n) = 2n^{1/4}, rounded."""
    return nearest_order(2.0 * n ** 0.25)


def theta1_nonparametric(sample, M=None, unbiased=False):
    """
    θ̃₁ = (1/π) Σ_{k≤M} k² (â_k² + b̂_k²), or with the unbiased ĉ_k in place of â_k² + b̂_k².

    Args:
        sample: AngleSample; unweighted for the unbiased variant
        M: Truncation, default round(2n^{1/4}) with n the total weight
        unbiased: Use ĉ_k

    Returns:
        Theta1Estimate; a negative unbiased total is clamped to 0 and flagged
    """
    if M is None:
        M = default_truncation(sample.n_effective)
    if int(M) != M or M < 1:
        raise ValueError(f"truncation M must be an integer >= 1, got {M!r}")
    moments = trig_moments(sample, int(M), unbiased=unbiased)
    k = np.arange(1, moments.order + 1, dtype=float)

    if not unbiased:
        value = float(np.sum(k ** 2 * (moments.a_hat ** 2 + moments.b_hat ** 2))) / np.pi
        return Theta1Estimate(value, Theta1Method.NONPARAMETRIC_BIASED, M_used=moments.order)

    value = float(np.sum(k ** 2 * moments.c_hat)) / np.pi
    flags = ()
    if value < 0.0:
        logger.warning(f"unbiased theta1 estimate {value:.4g} is negative; clamped to 0")
        value = 0.0
        flags = ("clamped",)
    return Theta1Estimate(value, Theta1Method.NONPARAMETRIC_UNBIASED, M_used=moments.order, flags=flags)


def _theta_value(theta1):
    return float(getattr(theta1, "value", theta1))


def _check_size(n):
    if n < 1:
        raise ValueError(f"sample size must be positive, got {n!r}")


def m_opt_density(theta1, n):
    """
    m_opt = (6πθ₁)^{1/3} n^{1/3}, rounded.

    Args:
        theta1: Theta1Estimate or a plain value
        n: Sample size

    Returns:
        BandwidthResult; θ₁ = 0 gives m = 1 flagged "uniform"
    """
    _check_size(n)
    value = _theta_value(theta1)
    if value <= 0.0:
        return BandwidthResult(1, 0.0, BandwidthTarget.DENSITY, value, flags=("uniform",))
    m_real = (6.0 * np.pi * value * n) ** (1.0 / 3.0)
    return BandwidthResult(nearest_order(m_real), m_real, BandwidthTarget.DENSITY, value)


def cdf_order_from_constant(c, n):
    """
    Real-valued CDF optimum cn/W₀(cn/e), the root of m(log m - 1) = cn.

    Returns:
        The optimum, or None when cn ≤ e and no root above e exists
    """
    scaled = c * n
    if scaled <= math.e:
        return None
    return scaled / lambert_w0(scaled / math.e)


def cdf_bandwidth(coeffs, density_at_origin, n, origin, flags=()):
    """
    CDF order for a density with the given Fourier coefficients.

    c = πθ₂(F, θ₀)/(1 + 2πF′(θ₀)) and m = cn/W₀(cn/e).

    Args:
        coeffs: FourierCoefficients of the density
        density_at_origin: F′(θ₀)
        n: Sample size
        origin: θ₀
        flags: Flags carried over from the fit

    Returns:
        BandwidthResult with c and the W₀ argument in auxiliary
    """
    _check_size(n)
    theta2 = theta2_from_coeffs(coeffs, origin)
    c = np.pi * theta2 / (1.0 + TWO_PI * density_at_origin)
    auxiliary = {"c": c, "w0_argument": c * n / math.e, "origin": origin}
    m_real = cdf_order_from_constant(c, n)
    if m_real is None:
        return BandwidthResult(1, 1.0, BandwidthTarget.CDF, theta2, auxiliary,
                               flags=tuple(flags) + ("small-constant",))
    return BandwidthResult(nearest_order(m_real), m_real, BandwidthTarget.CDF, theta2, auxiliary,
                           flags=tuple(flags))


def m_opt_cdf(sample, n=None, origin=-np.pi):
    """
    CDF order from a von Mises fit of the sample.

    Args:
        sample: AngleSample, n ≥ 2
        n: Sample size, default the total weight
        origin: θ₀

    Returns:
        BandwidthResult
    """
    estimate = theta1_parametric_vm(sample)
    fitted = VonMises(estimate.mu_hat, estimate.kappa_hat)
    n = sample.n_effective if n is None else n
    result = cdf_bandwidth(fitted.fourier_coeffs(CDF_THETA2_TERMS), float(fitted.density(origin)),
                           n, origin, flags=estimate.flags)
    logger.debug(f"CDF order {result.m} (real {result.m_real:.4g}) at origin {origin:.4f}")
    return result


def m_opt_cdf_from_model(model, n, origin=-np.pi):
    """CDF order from the true coefficients of a reference model."""
    return cdf_bandwidth(model.fourier_coeffs(), float(model.density(origin)), n, origin)


def m_opt_classical_wl(theta1, n, rho):
    """
    m_opt = (42πθ₁n/ρ⁴)^{1/7} under classical wrapped Laplace error with λ(l) = 1/(1 + ρ²l²).

    Args:
        theta1: Theta1Estimate or a plain value
        n: Sample size
        rho: Laplace scale, ρ > 0

    Returns:
        BandwidthResult with ρ in auxiliary
    """
    if not rho > 0:
        raise ConfigurationError(f"wrapped Laplace parameter must be positive, got {rho!r}")
    _check_size(n)
    value = _theta_value(theta1)
    auxiliary = {"rho": rho}
    if value <= 0.0:
        return BandwidthResult(1, 0.0, BandwidthTarget.CLASSICAL_WL, value, auxiliary, flags=("uniform",))
    m_real = (42.0 * np.pi * value * n / rho ** 4) ** (1.0 / 7.0)
    return BandwidthResult(nearest_order(m_real), m_real, BandwidthTarget.CLASSICAL_WL, value, auxiliary)
