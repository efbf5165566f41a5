"""
Exact CDFs, roughness functionals and the theoretical CDF origin
"""

from functools import lru_cache

import numpy as np
from scipy.integrate import simpson
from scipy.optimize import minimize_scalar

from estimators.cdf import cdf_series
from kernelmath.fejer import TWO_PI, wrap_angle


def true_density(model, theta):
    return model.density(theta)


def true_cdf(model, theta, origin=-np.pi):
    """
    F^{θ₀}(θ): probability of the arc from θ₀ counterclockwise to θ.

    Args:
        model: CircularModel
        theta: Angle or array
        origin: θ₀

    Returns:
        Values in [0, 1]
    """
    coeffs = model.fourier_coeffs()
    values = cdf_series(coeffs.a, coeffs.b, np.ones(coeffs.order), origin, np.atleast_1d(theta))
    values = np.clip(values, 0.0, 1.0)
    return values[0] if np.ndim(theta) == 0 else values


def fourier_coeffs(model, order=None):
    return model.fourier_coeffs(order)


def theta1_from_coeffs(coeffs):
    """θ₁ = (1/π) Σ k² (a_k² + b_k²) = ∫ f′²."""
    k = np.arange(1, coeffs.order + 1, dtype=float)
    return float(np.sum(k ** 2 * coeffs.magnitudes_squared())) / np.pi


def hilbert_term(coeffs, origin):
    """Σ (-a_k sin kθ₀ + b_k cos kθ₀), which is -π times the conjugate density at θ₀."""
    k = np.arange(1, coeffs.order + 1, dtype=float)
    return float(np.sum(-coeffs.a * np.sin(k * origin) + coeffs.b * np.cos(k * origin)))


def theta2_from_coeffs(coeffs, origin):
    """θ₂(F, θ₀) = (1/π) Σ (a_k² + b_k²) + (2/π) (Σ -a_k sin kθ₀ + b_k cos kθ₀)²."""
    return (float(np.sum(coeffs.magnitudes_squared())) + 2.0 * hilbert_term(coeffs, origin) ** 2) / np.pi


def theta_functionals(model):
    """
    Args:
        model: CircularModel

    Returns:
        (θ₁, callable θ₀ -> θ₂(F, θ₀))
    """
    coeffs = model.fourier_coeffs()
    return theta1_from_coeffs(coeffs), lambda origin: theta2_from_coeffs(coeffs, origin)


def variance_functional(model, origin, points=4096):
    """C(F^{θ₀}) = ∫ F^{θ₀}(1 - F^{θ₀}) along the arc from θ₀, by Simpson's rule."""
    offsets = np.linspace(0.0, TWO_PI, points + 1)
    values = true_cdf(model, origin + offsets, origin=origin)
    # the last node is a full turn; cdf_series maps it to 1
    return float(simpson(values * (1.0 - values), x=offsets))


@lru_cache(maxsize=64)
def theoretical_origin(model, grid_size=360):
    """
    Origin minimizing C(F^{θ₀}).

    A grid search over [-π, π) refined by a bounded scalar minimization around the best node.

    Returns:
        (θ₀ in [-π, π), C at θ₀)
    """
    grid = -np.pi + TWO_PI * np.arange(grid_size) / grid_size
    criteria = np.array([variance_functional(model, origin) for origin in grid])
    best = int(np.argmin(criteria))
    step = TWO_PI / grid_size
    refined = minimize_scalar(
        lambda origin: variance_functional(model, origin),
        bounds=(grid[best] - step, grid[best] + step),
        method="bounded",
        options={"xatol": 1e-6},
    )
    if refined.success and refined.fun < criteria[best] - 1e-12:
        return float(wrap_angle(refined.x)), float(refined.fun)
    return float(grid[best]), float(criteria[best])
