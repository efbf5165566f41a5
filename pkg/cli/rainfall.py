"""
Monthly rainfall occurrences, adjusted for month length
"""

import numpy as np

from estimators.sample import AngleSample

MONTHS = ("Jan", "Feb", "Mar", "Apr", "May", "Jun", "Jul", "Aug", "Sep", "Oct", "Nov", "Dec")

# Hourly rainfalls of 1 inch or more in the US, 1908-1937
ADJUSTED_FREQUENCIES = (100, 103, 229, 414, 676, 1248, 1458, 1365, 924, 378, 199, 143)


def month_angles(phase=0.0):
    """Month j at the bin centre -π + (2j - 1)π/12, shifted by phase."""
    j = np.arange(1, 13, dtype=float)
    return -np.pi + (2.0 * j - 1.0) * np.pi / 12.0 + phase


def load_rainfall(phase=0.0):
    """
    Args:
        phase: Shift of every month angle; -π/12 places January at -π

    Returns:
        Weighted AngleSample of the 12 months
    """
    return AngleSample(month_angles(phase), np.array(ADJUSTED_FREQUENCIES, dtype=float))
