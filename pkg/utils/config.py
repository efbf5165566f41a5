"""
Default settings shared across packages
"""

import os

# Estimation grid
DEFAULT_GRID_SIZE = 512

# Switch to the cosine series of the Fejér kernel when |sin(s/2)| falls below this
KERNEL_SERIES_SWITCH = 1e-6

# Simpson nodes per period must be at least this factor times (m + 1)
SIMPSON_RESOLUTION = 64

# Fourier truncation of reference models
FOURIER_TOLERANCE = 1e-14
FOURIER_MAX_TERMS = 4096

# Truncation of the fitted von Mises series in the CDF bandwidth
CDF_THETA2_TERMS = 512

# Error coefficients below this are treated as zero
LAMBDA_THRESHOLD = 1e-10

# Parametric fit
PARAMETRIC_QUADRATURE_POINTS = 4096
LARGE_KAPPA = 500.0
DEGENERATE_RESULTANT = 1e-12

# Monte Carlo
DEFAULT_REPLICATIONS = 500
CI_REPLICATIONS = 50
DENSITY_TOLERANCE = 0.25
CDF_TOLERANCE = 0.30

SEED_ENV_VAR = "FEJER_SEED"
FALLBACK_SEED = 20240601


def default_seed():
    """
    Master seed taken from the environment.

    Returns:
        The integer in FEJER_SEED, or the fallback seed when unset
    """
    raw = os.environ.get(SEED_ENV_VAR)
    if raw is None or not raw.strip():
        return FALLBACK_SEED
    return int(raw, 0)
