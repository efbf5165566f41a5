"""
Fejér distribution-function estimator with a free origin
"""

import numpy as np

from estimators.sample import EstimateGrid, EstimateKind, check_grid, default_grid
from estimators.trig import trig_moments
from kernelmath.fejer import TWO_PI, check_order, fejer_weights, wrap_angle


def arc_offset(theta, origin):
    """
    Position of θ along the arc [θ₀, θ₀ + 2π].

    A whole nonzero number of turns past the origin lands on 2π, the origin itself on 0.

    Returns:
        Offsets in [0, 2π]
    """
    delta = np.asarray(theta, dtype=float) - origin
    offset = np.mod(delta, TWO_PI)
    offset = np.where(offset >= TWO_PI, 0.0, offset)
    return np.where((offset == 0.0) & (delta > 0.0), TWO_PI, offset)


def cdf_series(a, b, transfer, origin, grid):
    """
    Integral from θ₀ along the arc of the series density with coefficients t_k·(a_k, b_k).

    Args:
        a: Cosine coefficients for k = 1..K
        b: Sine coefficients for k = 1..K
        transfer: Per-frequency multipliers
        origin: θ₀
        grid: Evaluation angles

    Returns:
        Array of CDF values
    """
    offset = arc_offset(grid, origin)
    point = origin + offset
    k = np.arange(1, len(a) + 1, dtype=float)
    scaled_a = transfer * a / k
    scaled_b = transfer * b / k
    phase = np.multiply.outer(point, k)
    start = k * origin
    series = (np.sin(phase) - np.sin(start)) @ scaled_a - (np.cos(phase) - np.cos(start)) @ scaled_b
    return offset / TWO_PI + series / np.pi


def cdf_estimate(sample, m, origin=-np.pi, grid=None):
    """
    Smooth CDF F̂(θ) = Σ w_i [W_m(θ - X_i) - W_m(θ₀ - X_i)] / Σ w_i along the arc from θ₀.

    Args:
        sample: AngleSample
        m: Fejér order
        origin: θ₀, where the estimate is anchored at 0
        grid: Evaluation angles, default 512-point grid

    Returns:
        EstimateGrid of kind CDF with values in [0, 1]
    """
    m = check_order(m)
    grid = default_grid() if grid is None else check_grid(grid)
    origin = float(wrap_angle(origin)) if not -np.pi <= origin <= np.pi else float(origin)
    moments = trig_moments(sample, m, unbiased=False)
    values = cdf_series(moments.a_hat, moments.b_hat, fejer_weights(m), origin, grid)
    values = np.clip(values, 0.0, 1.0)
    return EstimateGrid(theta=grid, values=values, kind=EstimateKind.CDF, m=m, origin=origin)
