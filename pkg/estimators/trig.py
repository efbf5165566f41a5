"""
Empirical trigonometric moments
"""

from dataclasses import dataclass

import numpy as np

from utils.exceptions import InputError


@dataclass(frozen=True)
class TrigMoments:
    """
    Sample Fourier coefficients for k = 1..order.

    c_hat holds unbiased estimates of a_k² + b_k² and is None for weighted samples.
    """
    order: int
    a_hat: np.ndarray
    b_hat: np.ndarray
    c_hat: np.ndarray = None

    @property
    def phi_hat(self):
        """Empirical characteristic function â_k - i·b̂_k, the weighted mean of e^{-ikX}."""
        return self.a_hat - 1j * self.b_hat

    def truncated(self, order):
        """Leading `order` moments."""
        if order > self.order:
            raise ValueError(f"only {self.order} moments available, {order} requested")
        c_hat = None if self.c_hat is None else self.c_hat[:order]
        return TrigMoments(order, self.a_hat[:order], self.b_hat[:order], c_hat)


def trig_moments(sample, M, unbiased=None):
    """
    Weighted sample moments â_k = Σ w cos(kX)/Σ w and b̂_k = Σ w sin(kX)/Σ w.

    Args:
        sample: AngleSample
        M: Highest order, M ≥ 1
        unbiased: True to require ĉ_k, False to skip it, None to add it whenever the sample is unweighted

    Returns:
        TrigMoments

    Raises:
        ValueError: if M < 1
        InputError: if ĉ_k is requested for a weighted sample or a single observation
    """
    if int(M) != M or M < 1:
        raise ValueError(f"moment order must be an integer >= 1, got {M!r}")
    M = int(M)
    if unbiased and not sample.unit_weights:
        raise InputError("unbiased |phi|^2 estimates need an unweighted sample")

    k = np.arange(1, M + 1, dtype=float)
    phase = np.multiply.outer(k, sample.angles)
    weights = sample.weights / sample.n_effective
    a_hat = np.clip(np.cos(phase) @ weights, -1.0, 1.0)
    b_hat = np.clip(np.sin(phase) @ weights, -1.0, 1.0)

    c_hat = None
    n = len(sample)
    want_c = sample.unit_weights if unbiased is None else unbiased
    if want_c:
        if n < 2:
            if unbiased:
                raise InputError("unbiased |phi|^2 estimates need at least two observations")
        else:
            c_hat = (n * n * (a_hat ** 2 + b_hat ** 2) - n) / (n * (n - 1))

    return TrigMoments(M, a_hat, b_hat, c_hat)
