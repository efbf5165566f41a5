"""
Moments of the Fejér kernel: exact finite series and a Simpson oracle
"""

from dataclasses import dataclass
import math

import numpy as np
from scipy.integrate import simpson

from kernelmath.fejer import check_order, fejer_kernel, fejer_weights, integrated_kernel
from utils.config import SIMPSON_RESOLUTION

ZETA3 = 1.2020569031595942854
EULER_GAMMA = 0.57721566490153286061

# Limits of the scaled moments as m grows
BETA_LIMIT = 4.0 * math.log(2.0)
GAMMA3_LIMIT = 6.0 * math.pi * math.log(2.0) - 21.0 * ZETA3 / math.pi
M4_LIMIT = 8.0 * math.pi ** 2 * math.log(2.0) - 36.0 * ZETA3


@dataclass(frozen=True)
class KernelMoments:
    """
    Integrals of the Fejér kernel of order m over [-π, π].

    alpha = ∫K², beta = ∫y²K, gamma3 = ∫|y|³K, m4 = ∫y⁴K,
    nu1 = 2π∫y·W·K, nu3 = ∫y³·W·K.
    """
    m: int
    alpha: float
    beta: float
    gamma3: float
    m4: float
    nu1: float
    nu3: float

    def as_tuple(self):
        return (self.alpha, self.beta, self.gamma3, self.m4, self.nu1, self.nu3)


def harmonic_sums(m, l):
    """
    Generalized and alternating harmonic sums.

    Args:
        m: Number of terms, m ≥ 1
        l: Power in 1..4

    Returns:
        (Σ_{k≤m} 1/k^l, Σ_{k≤m} (-1)^{k+1}/k^l)
    """
    if int(m) != m or m < 1:
        raise ValueError(f"m must be an integer >= 1, got {m!r}")
    if l not in (1, 2, 3, 4):
        raise ValueError(f"l must be in 1..4, got {l!r}")
    k = np.arange(1, int(m) + 1, dtype=float)
    terms = 1.0 / k ** l
    signs = np.where(k % 2 == 1, 1.0, -1.0)
    # smallest terms first
    return float(np.sum(terms[::-1])), float(np.sum((signs * terms)[::-1]))


def alpha_exact(m):
    """∫K_m² = 1/(2π) + m(2m+1)/(6π(m+1))."""
    m = check_order(m)
    return 1.0 / (2.0 * math.pi) + m * (2 * m + 1) / (6.0 * math.pi * (m + 1))


def _series_terms(m):
    k = np.arange(1, m + 1, dtype=float)
    return k, fejer_weights(m), np.where(k % 2 == 0, 1.0, -1.0)


def cross_sum(m):
    """
    Off-diagonal part of ν₃: -(12/π) Σ_{j≠k} w_j w_k (-1)^{j+k} / (j² - k²)².

    Summed along diagonals j = k + d, which keeps every inner sum positive.
    """
    m = check_order(m)
    weights = fejer_weights(m)
    k = np.arange(1, m + 1, dtype=float)
    per_distance = np.empty(m - 1)
    for d in range(1, m):
        low = k[: m - d]
        inner = weights[d:] * weights[: m - d] / (2.0 * low + d) ** 2
        sign = 1.0 if d % 2 == 0 else -1.0
        per_distance[d - 1] = sign * np.sum(inner) / d ** 2
    return -24.0 / math.pi * float(np.sum(per_distance)) if m > 1 else 0.0


def diagonal_sum(m):
    """Diagonal part of ν₃: (1/(4π)) Σ w_k² (3 - 2k²π²)/k⁴."""
    k, w, _ = _series_terms(check_order(m))
    return float(np.sum(w ** 2 * (3.0 - 2.0 * k ** 2 * math.pi ** 2) / k ** 4)) / (4.0 * math.pi)


def kernel_moments_exact(m):
    """
    Kernel moments from their finite trigonometric series.

    Args:
        m: Kernel order

    Returns:
        KernelMoments, exact up to roundoff
    """
    m = check_order(m)
    k, w, s = _series_terms(m)
    pi = math.pi

    signed_k2 = float(np.sum(w * s / k ** 2))
    beta = pi ** 2 / 3.0 + 4.0 * signed_k2
    gamma3 = pi ** 3 / 4.0 + 6.0 / pi * float(
        np.sum(w * (pi ** 2 * s / k ** 2 - 2.0 * s / k ** 4 + 2.0 / k ** 4))
    )
    m4 = pi ** 4 / 5.0 + float(np.sum(w * (8.0 * pi ** 2 * s / k ** 2 - 48.0 * s / k ** 4)))
    nu1 = pi ** 2 / 3.0 + 2.0 * signed_k2 - float(np.sum(w ** 2 / k ** 2))
    nu3 = (
        pi ** 3 / 10.0
        + 3.0 / pi * float(np.sum(w * s * (pi ** 2 * k ** 2 - 6.0) / k ** 4))
        + diagonal_sum(m)
        + cross_sum(m)
    )
    return KernelMoments(m, alpha_exact(m), beta, gamma3, m4, nu1, nu3)


def kernel_moments_quadrature(m, points_per_period):
    """
    Kernel moments by composite Simpson integration over [-π, π].

    Args:
        m: Kernel order
        points_per_period: Even number of Simpson intervals, at least 64·(m+1)

    Returns:
        KernelMoments
    """
    m = check_order(m)
    minimum = SIMPSON_RESOLUTION * (m + 1)
    if points_per_period < minimum or points_per_period % 2:
        raise ValueError(
            f"need an even number of at least {minimum} intervals for m={m}, got {points_per_period}"
        )
    y = np.linspace(-np.pi, np.pi, int(points_per_period) + 1)
    kernel = fejer_kernel(m, y)
    integral = integrated_kernel(m, y)

    def integrate(values):
        return float(simpson(values, x=y))

    return KernelMoments(
        m=m,
        alpha=integrate(kernel ** 2),
        beta=integrate(y ** 2 * kernel),
        gamma3=integrate(np.abs(y) ** 3 * kernel),
        m4=integrate(y ** 4 * kernel),
        nu1=2.0 * math.pi * integrate(y * integral * kernel),
        nu3=integrate(y ** 3 * integral * kernel),
    )


def nu1_expansion(m):
    """Two-term expansion (2 log m + 2(log 2 + γ))/(m+1)."""
    return (2.0 * math.log(m) + 2.0 * (math.log(2.0) + EULER_GAMMA)) / (m + 1)


def nu3_sum_columns(m):
    """
    Scaled remainders of the two parts of ν₃'s trigonometric sum.

    Returns:
        (m(S₁ + 3π³/40 - π log m/(m+1)),
         m(S₂ - 2π³/40 + π log m/(m+1)),
         m(S₁ + S₂ + π³/40))
    """
    m = check_order(m)
    s1 = diagonal_sum(m)
    s2 = cross_sum(m)
    drift = math.pi * math.log(m) / (m + 1)
    cube = math.pi ** 3 / 40.0
    return (
        m * (s1 + 3.0 * cube - drift),
        m * (s2 - 2.0 * cube + drift),
        m * (s1 + s2 + cube),
    )
