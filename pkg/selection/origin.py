"""
Data-dependent origin of the circular distribution function
"""

from dataclasses import dataclass

import numpy as np

from kernelmath.fejer import TWO_PI, wrap_angle
from utils.exceptions import DegenerateSampleError
from utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class OriginResult:
    """
    Selected origin with the range of the empirical criterion.

    minimizing_arc is (start, end) with end > start, possibly past π; theta0 is its wrapped midpoint.
    """
    theta0: float
    criterion_min: float
    criterion_max: float
    minimizing_arc: tuple
    ties: int = 1


def _check_sample(sample):
    if len(sample) < 2:
        raise DegenerateSampleError("origin selection needs at least two observations")


def criterion_cn(sample, theta0):
    """
    C_n(θ₀) = Σ_{i<n} p_i (1 - p_i)(x_(i+1) - x_(i)) over the angles unrolled from θ₀.

    p_i is the cumulative weight fraction of the first i ordered angles, i/n when unweighted.

    Args:
        sample: AngleSample, n ≥ 2
        theta0: Origin

    Returns:
        Criterion in [0, π/2]
    """
    _check_sample(sample)
    offsets = np.mod(sample.angles - theta0, TWO_PI)
    order = np.argsort(offsets, kind="stable")
    fractions = np.cumsum(sample.weights[order])[:-1] / sample.n_effective
    gaps = np.diff(offsets[order])
    return float(np.sum(fractions * (1.0 - fractions) * gaps))


def _gaps(angles):
    """Nonempty arcs between circularly consecutive distinct angles, as (start, end) arrays."""
    distinct = np.unique(angles)
    starts = distinct
    ends = np.append(distinct[1:], distinct[0] + TWO_PI)
    return starts, ends


def select_origin(sample):
    """
    Exact minimizer of C_n over θ₀.

    C_n is constant between consecutive observations, so it is evaluated once per gap. Among
    minimizing gaps the widest wins, then the one whose midpoint comes first scanning from -π.

    Args:
        sample: AngleSample, n ≥ 2

    Returns:
        OriginResult
    """
    _check_sample(sample)
    starts, ends = _gaps(sample.angles)
    midpoints = wrap_angle((starts + ends) / 2.0)
    widths = ends - starts
    criteria = np.array([criterion_cn(sample, midpoint) for midpoint in midpoints])

    lowest = criteria.min()
    minimal = np.nonzero(np.isclose(criteria, lowest, rtol=1e-12, atol=1e-15))[0]
    widest = widths[minimal].max()
    candidates = minimal[np.isclose(widths[minimal], widest, rtol=1e-12, atol=0.0)]
    chosen = int(candidates[np.argmin(midpoints[candidates])])

    if minimal.size > 1:
        logger.debug(f"{minimal.size} gaps attain the minimum criterion {lowest:.6g}")
    return OriginResult(
        theta0=float(midpoints[chosen]),
        criterion_min=float(lowest),
        criterion_max=float(criteria.max()),
        minimizing_arc=(float(starts[chosen]), float(ends[chosen])),
        ties=int(minimal.size),
    )


def criterion_profile(sample, grid):
    """C_n at each origin on a grid."""
    return np.array([criterion_cn(sample, origin) for origin in np.atleast_1d(grid)])
