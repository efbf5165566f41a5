"""
Fejér density estimator
"""

import numpy as np

from estimators.sample import EstimateGrid, EstimateKind, check_grid, default_grid
from estimators.trig import trig_moments
from kernelmath.fejer import TWO_PI, check_order, fejer_kernel, fejer_weights


def evaluate_series(a, b, transfer, grid):
    """
    Evaluate (1/2π)[1 + 2 Σ t_k (a_k cos kθ + b_k sin kθ)].

    Args:
        a: Cosine coefficients for k = 1..K
        b: Sine coefficients for k = 1..K
        transfer: Per-frequency multipliers t_k, same length
        grid: Evaluation angles

    Returns:
        Array of values on the grid
    """
    grid = np.asarray(grid, dtype=float)
    k = np.arange(1, len(a) + 1, dtype=float)
    phase = np.multiply.outer(grid, k)
    series = np.cos(phase) @ (transfer * a) + np.sin(phase) @ (transfer * b)
    return (1.0 + 2.0 * series) / TWO_PI


def density_estimate(sample, m, grid=None):
    """
    Fejér density estimate f̂(θ) = Σ w_j K_m(θ - X_j) / Σ w_j.

    Evaluated through the trigonometric moments of the sample.

    Args:
        sample: AngleSample
        m: Fejér order
        grid: Evaluation angles, default 512-point grid

    Returns:
        EstimateGrid of kind DENSITY
    """
    m = check_order(m)
    grid = default_grid() if grid is None else check_grid(grid)
    moments = trig_moments(sample, m, unbiased=False)
    values = evaluate_series(moments.a_hat, moments.b_hat, fejer_weights(m), grid)
    # the kernel is nonnegative; only roundoff can cross zero
    values = np.maximum(values, 0.0)
    return EstimateGrid(theta=grid, values=values, kind=EstimateKind.DENSITY, m=m)


def density_estimate_direct(sample, m, grid):
    """Kernel-sum form of the estimator, O(n·G·m) in the worst case."""
    m = check_order(m)
    grid = check_grid(grid)
    kernel = fejer_kernel(m, np.subtract.outer(grid, sample.angles))
    return kernel @ sample.weights / sample.n_effective
