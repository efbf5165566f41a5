"""
Angle samples and estimate grids
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from kernelmath.fejer import TWO_PI, wrap_angle
from utils.config import DEFAULT_GRID_SIZE
from utils.exceptions import InputError


class AngleSample:
    """Observed angles in [-π, π) with nonnegative weights"""
    def __init__(self, angles, weights=None):
        """
        Args:
            angles: Angles in radians, any real values (reduced into [-π, π))
            weights: Optional nonnegative weights; all ones when omitted

        Raises:
            InputError: on empty input, mismatched lengths, negative or all-zero weights
        """
        angles = np.atleast_1d(np.asarray(angles, dtype=float))
        if angles.ndim != 1 or angles.size == 0:
            raise InputError("a sample needs at least one angle")
        if not np.all(np.isfinite(angles)):
            raise InputError("angles must be finite")

        if weights is None:
            weights = np.ones_like(angles)
            self.unit_weights = True
        else:
            weights = np.array(weights, dtype=float, ndmin=1)
            if weights.shape != angles.shape:
                raise InputError(f"{angles.size} angles but {weights.size} weights")
            if np.any(weights < 0) or not np.all(np.isfinite(weights)):
                raise InputError("weights must be finite and nonnegative")
            self.unit_weights = bool(np.all(weights == 1.0))

        total = float(np.sum(weights))
        if total <= 0:
            raise InputError("sum of weights must be positive")

        self.angles = wrap_angle(angles)
        self.weights = weights
        self.n_effective = total
        self.angles.setflags(write=False)
        self.weights.setflags(write=False)

    def __len__(self):
        return self.angles.size

    def __repr__(self):
        return f"AngleSample(n={len(self)}, n_effective={self.n_effective:g})"

    def rotated(self, delta):
        """Sample shifted by delta radians."""
        return AngleSample(self.angles + delta, None if self.unit_weights else self.weights)

    def mean_resultant(self):
        """
        Returns:
            (mean direction in [-π, π), mean resultant length R̄)
        """
        c = float(np.sum(self.weights * np.cos(self.angles))) / self.n_effective
        s = float(np.sum(self.weights * np.sin(self.angles))) / self.n_effective
        return float(wrap_angle(np.arctan2(s, c))), min(1.0, float(np.hypot(c, s)))


class EstimateKind(Enum):
    DENSITY = "density"
    CDF = "cdf"


@dataclass(frozen=True)
class EstimateGrid:
    """Estimated density or CDF values on a set of angles"""
    theta: np.ndarray
    values: np.ndarray
    kind: EstimateKind
    m: int
    origin: float = None
    negative_mass: float = 0.0
    flags: tuple = ()

    def is_uniform(self):
        """True when theta is an equispaced grid covering one period."""
        return is_uniform_grid(self.theta)

    @property
    def min_value(self):
        return float(np.min(self.values))


def default_grid(size=DEFAULT_GRID_SIZE):
    """
    Equispaced grid of `size` angles starting at -π, excluding π.

    Args:
        size: Number of points

    Returns:
        Array of angles
    """
    if size < 1:
        raise InputError(f"grid size must be positive, got {size}")
    return -np.pi + TWO_PI * np.arange(size) / size


def is_uniform_grid(theta, tol=1e-9):
    """Equispaced grid of one period, first point anywhere."""
    theta = np.asarray(theta, dtype=float)
    if theta.size < 2:
        return False
    step = TWO_PI / theta.size
    return bool(np.all(np.abs(np.diff(theta) - step) < tol))


def periodic_trapezoid(values):
    """Trapezoid integral over one period of values on a uniform periodic grid."""
    values = np.asarray(values, dtype=float)
    return float(np.sum(values)) * TWO_PI / values.size


def check_grid(grid):
    """
    Args:
        grid: Evaluation angles

    Returns:
        1-D float array

    Raises:
        InputError: on an empty grid
    """
    grid = np.atleast_1d(np.asarray(grid, dtype=float))
    if grid.size == 0:
        raise InputError("evaluation grid is empty")
    return grid
