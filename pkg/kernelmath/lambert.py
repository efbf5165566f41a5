"""
Principal branch of the Lambert W function
"""

import math

BRANCH_POINT = -1.0 / math.e
MAX_ITERATIONS = 64


def _initial_guess(z):
    if z > math.e:
        log_z = math.log(z)
        return log_z - math.log(log_z)
    if z < -0.25:
        # expansion about the branch point
        p = math.sqrt(max(0.0, 2.0 * (math.e * z + 1.0)))
        return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p ** 3
    return math.log1p(z)


def lambert_w0(z):
    """
    Solve w·e^w = z for w ≥ -1 by Halley iteration.

    Args:
        z: Real argument, z ≥ -1/e

    Returns:
        W₀(z)

    Raises:
        ValueError: if z < -1/e
    """
    z = float(z)
    if z < BRANCH_POINT:
        # allow roundoff in callers computing -1/e themselves
        if z < BRANCH_POINT * (1.0 + 1e-15):
            raise ValueError(f"Lambert W0 is undefined below -1/e, got {z!r}")
        return -1.0
    if z == 0.0:
        return 0.0
    if z == BRANCH_POINT:
        return -1.0

    w = _initial_guess(z)
    for _ in range(MAX_ITERATIONS):
        ew = math.exp(w)
        residual = w * ew - z
        if residual == 0.0:
            break
        wp1 = w + 1.0
        if wp1 == 0.0:
            break
        step = residual / (ew * wp1 - (w + 2.0) * residual / (2.0 * wp1))
        w -= step
        if abs(step) <= 1e-15 * (1.0 + abs(w)):
            break
    return max(w, -1.0)
