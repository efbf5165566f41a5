"""
Fejér kernel and integrated kernel
"""

import numpy as np

from utils.config import KERNEL_SERIES_SWITCH

TWO_PI = 2.0 * np.pi


def check_order(m):
    """
    Validate a Fejér order.

    Args:
        m: Kernel order

    Returns:
        m as a Python int

    Raises:
        ValueError: if m is not an integer ≥ 1
    """
    if isinstance(m, bool) or int(m) != m or m < 1:
        raise ValueError(f"Fejér order must be an integer >= 1, got {m!r}")
    return int(m)


def fejer_weights(m):
    """
    Cesàro taper 1 - k/(m+1) for k = 1..m.

    Args:
        m: Kernel order

    Returns:
        Array of length m
    """
    m = check_order(m)
    k = np.arange(1, m + 1, dtype=float)
    return 1.0 - k / (m + 1)


def wrap_angle(theta):
    """Reduce angles into [-π, π); π maps to -π."""
    wrapped = np.mod(np.asarray(theta, dtype=float) + np.pi, TWO_PI) - np.pi
    # mod can round up to exactly 2π for tiny negative inputs
    return np.where(wrapped >= np.pi, wrapped - TWO_PI, wrapped)


def reduce_closed(theta):
    """Reduce angles into [-π, π], leaving values already inside untouched."""
    theta = np.asarray(theta, dtype=float)
    inside = (theta >= -np.pi) & (theta <= np.pi)
    return np.where(inside, theta, wrap_angle(theta))


def _cosine_series(m, s):
    weights = fejer_weights(m)
    k = np.arange(1, m + 1, dtype=float)
    return 1.0 / TWO_PI + np.cos(np.multiply.outer(s, k)) @ weights / np.pi


def fejer_kernel(m, s):
    """
    Fejér kernel K_m(s) = (sin((m+1)s/2) / sin(s/2))² / (2π(m+1)).

    The cosine series is used where |sin(s/2)| < 1e-6.

    Args:
        m: Kernel order
        s: Angle or array of angles in radians

    Returns:
        Kernel values with the shape of s
    """
    m = check_order(m)
    s = np.asarray(s, dtype=float)
    half = np.sin(s / 2.0)
    near_zero = np.abs(half) < KERNEL_SERIES_SWITCH
    safe = np.where(near_zero, 1.0, half)
    values = (np.sin((m + 1) * s / 2.0) / safe) ** 2 / (TWO_PI * (m + 1))
    if np.any(near_zero):
        values = np.where(near_zero, _cosine_series(m, s), values)
    return values[()] if values.ndim == 0 else values


def fejer_antiderivative(m, x):
    """
    Antiderivative (x + π)/(2π) + (1/π) Σ w_k sin(kx)/k valid on the whole real line.

    On [-π, π] this is W_m; each further turn adds exactly 1.
    """
    m = check_order(m)
    x = np.asarray(x, dtype=float)
    k = np.arange(1, m + 1, dtype=float)
    coeffs = fejer_weights(m) / k
    values = (x + np.pi) / TWO_PI + np.sin(np.multiply.outer(x, k)) @ coeffs / np.pi
    return values[()] if values.ndim == 0 else values


def integrated_kernel(m, theta):
    """
    Integrated Fejér kernel W_m(θ) = ∫_{-π}^{θ} K_m.

    Args:
        m: Kernel order
        theta: Angle or array; values outside [-π, π] are reduced first

    Returns:
        Values in [0, 1]; W_m(-π) = 0 and W_m(π) = 1
    """
    values = np.clip(fejer_antiderivative(m, reduce_closed(theta)), 0.0, 1.0)
    return values[()] if np.ndim(values) == 0 else values
