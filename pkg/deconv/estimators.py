"""
Fejér-tapered Fourier estimators under measurement error
"""

import numpy as np

from deconv.error_models import ErrorModel
from estimators.density import evaluate_series
from estimators.sample import EstimateGrid, EstimateKind, check_grid, default_grid, periodic_trapezoid
from estimators.trig import trig_moments
from kernelmath.fejer import check_order, fejer_weights
from utils.config import LAMBDA_THRESHOLD
from utils.exceptions import InfeasibleDeconvolutionError
from utils.logger import get_logger

logger = get_logger(__name__)

# Internal grid for negative mass and renormalization
MASS_GRID_SIZE = 2048
NEGATIVE_MASS_FLOOR = 1e-12


def _series_estimate(sample, m, transfer, grid, clip, report, label):
    grid = default_grid() if grid is None else check_grid(grid)
    moments = trig_moments(sample, m, unbiased=False)
    values = evaluate_series(moments.a_hat, moments.b_hat, transfer, grid)
    fine = evaluate_series(moments.a_hat, moments.b_hat, transfer, default_grid(MASS_GRID_SIZE))
    negative_mass = periodic_trapezoid(np.maximum(-fine, 0.0))

    flags = ()
    if negative_mass > NEGATIVE_MASS_FLOOR or np.any(values < -NEGATIVE_MASS_FLOOR):
        if report:
            logger.warning(f"{label} estimate with m={m} has negative mass {negative_mass:.3e}")
        flags = ("negative",)
    if clip:
        positive_mass = periodic_trapezoid(np.maximum(fine, 0.0))
        values = np.maximum(values, 0.0) / positive_mass
        flags += ("clipped",)
    return EstimateGrid(theta=grid, values=values, kind=EstimateKind.DENSITY, m=m,
                        negative_mass=negative_mass, flags=flags)


def berkson_estimate(sample, m, err=None, grid=None, clip=False, report=True):
    """
    Density of X = X* + ε from observations of X*.

    f̂(x) = (1/2π)[1 + 2 Σ_l (1 - l/(m+1)) λ(l)(â_l cos lx + b̂_l sin lx)]

    Args:
        sample: AngleSample of X*
        m: Fejér order
        err: ErrorModel, default no error
        grid: Evaluation angles, default 512-point grid
        clip: Clip at 0 and renormalize to unit mass
        report: Log a warning when the estimate goes negative

    Returns:
        EstimateGrid with the negative mass reported
    """
    m = check_order(m)
    err = ErrorModel.none() if err is None else err
    return _series_estimate(sample, m, fejer_weights(m) * err.lambdas(m), grid, clip, report, "Berkson")


def check_feasible(err, m):
    """
    Raises:
        InfeasibleDeconvolutionError: naming the first l ≤ m with |λ(l)| < 1e-10
    """
    lambdas = err.lambdas(m)
    small = np.nonzero(np.abs(lambdas) < LAMBDA_THRESHOLD)[0]
    if small.size:
        frequency = int(small[0]) + 1
        raise InfeasibleDeconvolutionError(frequency, float(lambdas[small[0]]))
    return lambdas


def classical_estimate(sample, m, err=None, grid=None, clip=False, report=True):
    """
    Deconvolved density of X from observations X* = X + ε.

    f̃(x) = (1/2π)[1 + 2 Σ_l ((1 - l/(m+1))/λ(l))(â_l cos lx + b̂_l sin lx)]

    Args:
        sample: AngleSample of X*
        m: Fejér order
        err: ErrorModel, default no error
        grid: Evaluation angles, default 512-point grid
        clip: Clip at 0 and renormalize to unit mass
        report: Log a warning when the estimate goes negative

    Returns:
        EstimateGrid, possibly negative, with the negative mass reported
    """
    m = check_order(m)
    err = ErrorModel.none() if err is None else err
    lambdas = check_feasible(err, m)
    return _series_estimate(sample, m, fejer_weights(m) / lambdas, grid, clip, report, "classical")
