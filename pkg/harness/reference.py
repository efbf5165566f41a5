"""
Reference values of the simulation tables

Rows are keyed by (model label, n). MISE entries of the density tables are on the degree
scale, see DENSITY_TABLE_SCALE.
"""

import math

# Density tables match integrated squared error taken over degrees
DENSITY_TABLE_SCALE = math.pi / 180.0
CDF_TABLE_SCALE = 1.0

DENSITY_COLUMNS = ("m=5", "m=10", "m=sqrt(n)", "m=m_OP", "m=m_ON", "avg m_OP", "avg m_ON", "m_TH")

ERROR_FREE = {
    ("WN(0,0.75)", 50): (3.36e-4, 4.78e-4, 3.35e-4, 3.54e-4, 5.44e-4, 7.41, 10.1, 6.73),
    ("WN(0,0.9)", 50): (2.26e-3, 8.77e-4, 1.18e-3, 9.26e-4, 1.10e-3, 11.7, 14.8, 11.1),
    ("Mix(WN(0,0.9),WN(π/2,0.75),0.5)", 50): (3.71e-4, 5.78e-4, 3.99e-4, 3.86e-4, 6.19e-4, 5.50, 9.78, 6.69),
    ("Mix(WN(0,0.9),WN(π/2,0.9),0.5)", 50): (6.13e-4, 6.67e-4, 5.34e-4, 5.61e-4, 7.59e-4, 5.99, 10.3, 7.98),
    ("Mix(WN(0,0.9),WN(π/2,0.75),0.2)", 50): (2.10e-4, 4.64e-4, 2.72e-4, 2.44e-4, 4.00e-4, 5.94, 7.92, 5.57),
    ("Mix(WN(0,0.9),WN(π/2,0.75),0.8)", 50): (1.16e-3, 7.75e-4, 7.88e-4, 8.38e-4, 1.01e-3, 7.21, 12.9, 9.34),
    ("Mix(WN(0,0.75),WN(π/2,0.75),0.5)", 50): (1.80e-4, 4.91e-4, 2.74e-4, 1.88e-5, 3.84e-4, 5.00, 7.79, 4.52),
    ("Mix(WN(0,0.75),WN(π/2,0.75),0.2)", 50): (2.20e-4, 4.67e-4, 2.79e-4, 2.51e-4, 4.01e-4, 5.87, 7.75, 5.53),
    ("Mix(WN(0,0.75),WN(π,0.75),0.5)", 50): (2.33e-4, 5.45e-4, 3.25e-4, 6.61e-5, 4.90e-4, 1.67, 8.74, 4.94),
    ("WN(0,0.75)", 200): (1.33e-4, 6.18e-5, 7.58e-5, 6.61e-5, 9.15e-5, 11.6, 15.5, 10.7),
    ("WN(0,0.9)", 200): (1.80e-3, 2.85e-4, 1.80e-4, 1.75e-4, 2.11e-3, 18.2, 23.5, 17.6),
    ("Mix(WN(0,0.9),WN(π/2,0.75),0.5)", 200): (1.28e-4, 6.33e-5, 7.92e-5, 6.61e-5, 9.35e-6, 8.56, 15.2, 10.6),
    ("Mix(WN(0,0.9),WN(π/2,0.9),0.5)", 200): (3.93e-4, 9.73e-5, 9.91e-5, 1.03e-4, 1.18e-4, 9.34, 16.2, 12.7),
    ("Mix(WN(0,0.9),WN(π/2,0.75),0.2)", 200): (5.63e-5, 4.36e-5, 6.41e-5, 4.20e-5, 5.64e-5, 9.18, 11.5, 8.85),
    ("Mix(WN(0,0.9),WN(π/2,0.75),0.8)", 200): (7.03e-4, 1.56e-4, 1.25e-4, 1.44e-4, 1.62e-4, 11.2, 20.5, 14.8),
    ("Mix(WN(0,0.75),WN(π/2,0.75),0.5)", 200): (2.79e-5, 3.65e-5, 6.12e-5, 2.90e-5, 5.02e-5, 7.79, 11.3, 7.18),
    ("Mix(WN(0,0.75),WN(π/2,0.75),0.2)", 200): (5.74e-5, 4.44e-5, 6.46e-5, 4.30e-5, 5.80e-4, 9.08, 11.5, 8.77),
    ("Mix(WN(0,0.75),WN(π,0.75),0.5)", 200): (4.24e-5, 4.47e-5, 6.93e-5, 5.67e-4, 6.67e-5, 1.65, 13.0, 7.84),
}

CLASSICAL_LAPLACE = {
    ("WN(0,0.75)", 50): (5.26e-4, 4.18e-3, 9.82e-4, 1.33e-3, 2.63e-3, 7.62, 8.76, 7.50),
    ("WN(0,0.9)", 50): (2.90e-3, 5.41e-3, 2.41e-3, 3.79e-3, 5.86e-3, 8.97, 10.0, 9.29),
    ("Mix(WN(0,0.9),WN(π/2,0.75),0.5)", 50): (6.32e-4, 4.32e-3, 1.15e-3, 1.06e-3, 2.45e-3, 6.77, 8.45, 7.48),
    ("Mix(WN(0,0.9),WN(π/2,0.9),0.5)", 50): (9.42e-4, 4.49e-3, 1.37e-3, 1.36e-3, 2.65e-4, 6.98, 8.48, 8.07),
    ("Mix(WN(0,0.9),WN(π/2,0.75),0.2)", 50): (4.16e-4, 4.12e-3, 9.33e-4, 9.10e-4, 1.86e-3, 6.95, 7.92, 6.92),
    ("Mix(WN(0,0.9),WN(π/2,0.75),0.8)", 50): (1.56e-3, 4.74e-3, 1.69e-3, 1.95e-4, 4.16e-3, 7.51, 9.44, 8.63),
    ("Mix(WN(0,0.75),WN(π/2,0.75),0.5)", 50): (3.32e-4, 4.25e-3, 8.85e-4, 6.93e-4, 1.88e-3, 6.45, 7.97, 6.32),
    ("Mix(WN(0,0.75),WN(π/2,0.75),0.2)", 50): (4.25e-4, 4.08e-3, 9.40e-4, 8.99e-4, 1.87e-3, 6.91, 7.91, 6.89),
    ("Mix(WN(0,0.75),WN(π,0.75),0.5)", 50): (4.02e-4, 4.11e-3, 9.30e-4, 3.51e-4, 1.98e-3, 4.07, 8.24, 6.57),
    ("WN(0,0.75)", 200): (1.64e-4, 3.22e-4, 1.89e-3, 2.31e-4, 4.49e-4, 9.08, 10.5, 9.15),
    ("WN(0,0.9)", 200): (1.94e-3, 7.55e-4, 2.38e-3, 8.86e-4, 1.30e-3, 10.9, 12.1, 11.3),
    ("Mix(WN(0,0.9),WN(π/2,0.75),0.5)", 200): (1.63e-4, 3.17e-4, 1.84e-3, 1.71e-4, 3.71e-4, 8.05, 10.1, 9.11),
    ("Mix(WN(0,0.9),WN(π/2,0.9),0.5)", 200): (3.46e-4, 3.72e-4, 1.87e-3, 2.56e-4, 4.38e-4, 8.39, 10.2, 9.85),
    ("Mix(WN(0,0.9),WN(π/2,0.75),0.2)", 200): (7.68e-5, 2.81e-4, 1.90e-3, 1.41e-4, 2.61e-4, 8.30, 9.25, 8.43),
    ("Mix(WN(0,0.9),WN(π/2,0.75),0.8)", 200): (7.95e-4, 5.17e-4, 2.07e-3, 4.34e-4, 8.26e-4, 9.03, 11.4, 10.5),
    ("Mix(WN(0,0.75),WN(π/2,0.75),0.5)", 200): (4.25e-5, 2.66e-4, 1.83e-3, 1.01e-4, 2.45e-4, 7.95, 9.29, 7.71),
    ("Mix(WN(0,0.75),WN(π/2,0.75),0.2)", 200): (7.78e-5, 2.94e-4, 1.95e-3, 1.41e-4, 2.90e-4, 8.23, 9.31, 8.40),
    ("Mix(WN(0,0.75),WN(π,0.75),0.5)", 200): (5.49e-5, 2.59e-4, 1.76e-3, 7.22e-5, 2.65e-4, 4.00, 9.72, 8.01),
}

ROUNDED_COLUMNS = (
    "none param", "none nonpar", "WL(0.1) param", "WL(0.1) nonpar",
    "WL(0.2) param", "WL(0.2) nonpar", "U param", "U nonpar", "avg m_OP", "avg m_ON",
)

ROUNDED_BERKSON = {
    ("VM(π,5)", 50): (2.68e-3, 1.33e-2, 1.68e-3, 2.41e-3, 2.25e-3, 2.01e-3, 1.54e-3, 1.45e-3, 10.9, 13.8),
    ("VM(π,5)", 100): (5.81e-3, 3.58e-2, 1.19e-3, 2.71e-3, 1.33e-3, 1.25e-3, 6.93e-4, 6.44e-4, 13.6, 17.6),
    ("VM(π,5)", 200): (2.28e-2, 8.99e-2, 1.92e-3, 4.47e-3, 1.12e-2, 1.13e-3, 4.70e-4, 4.54e-4, 16.9, 22.1),
    ("VM(π,5)", 500): (9.13e-2, 9.62e-1, 4.36e-3, 1.67e-2, 9.89e-4, 1.25e-3, 3.15e-4, 3.98e-4, 22.9, 45.3),
    ("VM(0,1)", 50): (1.69e-4, 3.80e-4, 1.62e-4, 2.72e-4, 1.56e-4, 1.81e-4, 1.61e-4, 2.50e-4, 4.28, 7.48),
    ("VM(0,1)", 100): (6.86e-5, 4.08e-4, 6.57e-5, 1.30e-4, 6.51e-5, 6.84e-5, 6.50e-5, 9.63e-4, 5.31, 9.82),
    ("VM(0,1)", 200): (2.95e-5, 4.58e-4, 2.85e-5, 6.14e-5, 3.03e-5, 2.72e-5, 2.81e-5, 3.15e-5, 6.58, 11.4),
    ("VM(0,1)", 500): (9.02e-6, 1.77e-3, 8.33e-6, 8.55e-5, 9.55e-6, 1.11e-5, 8.09e-6, 8.29e-6, 8.99, 15.0),
    ("WN(π/2,0.75)", 50): (4.04e-4, 5.00e-4, 3.68e-4, 4.08e-4, 3.71e-4, 3.78e-4, 3.59e-4, 3.88e-4, 7.31, 7.81),
    ("WN(π/2,0.75)", 100): (1.86e-4, 6.74e-4, 1.67e-4, 2.26e-4, 1.90e-4, 1.89e-4, 1.62e-4, 1.74e-4, 9.05, 10.1),
    ("WN(π/2,0.75)", 200): (1.74e-3, 9.65e-4, 8.29e-5, 1.41e-4, 9.29e-5, 9.66e-5, 6.77e-5, 7.15e-5, 11.4, 12.0),
    ("WN(π/2,0.75)", 500): (3.55e-3, 5.47e-3, 2.15e-4, 2.88e-4, 6.30e-5, 6.59e-5, 2.87e-5, 2.97e-5, 15.3, 15.7),
    ("WN(π/2,0.9)", 50): (2.44e-3, 2.76e-3, 1.48e-3, 1.53e-3, 2.05e-3, 2.08e-3, 1.32e-3, 1.35e-3, 11.2, 11.1),
    ("WN(π/2,0.9)", 100): (6.94e-3, 1.16e-2, 1.41e-3, 1.67e-3, 1.51e-3, 1.51e-3, 8.05e-4, 8.15e-4, 13.8, 14.3),
    ("WN(π/2,0.9)", 200): (2.72e-2, 3.12e-2, 2.14e-3, 2.30e-3, 1.13e-3, 1.13e-3, 4.54e-3, 4.57e-4, 17.3, 17.6),
    ("WN(π/2,0.9)", 500): (1.02e-1, 2.07e-1, 4.85e-3, 7.40e-3, 1.08e-3, 1.13e-3, 3.47e-4, 3.57e-4, 23.4, 27.8),
}

CDF_FIXED_COLUMNS = ("m=5", "m=10", "m=sqrt(n)", "m=m_OP", "avg m_OP", "m_TH")

CDF_FIXED_ORIGIN = {
    ("VM(0,5)", 50): (2.37e-4, 6.64e-5, 1.14e-4, 4.36e-5, 30.4, 29.3),
    ("VM(π/2,5)", 50): (4.49e-4, 9.18e-5, 1.89e-4, 4.18e-5, 39.0, 38.0),
    ("VM(π,5)", 50): (5.84e-4, 6.85e-4, 5.72e-4, 8.20e-4, 10.4, 9.03),
    ("VM(0,1)", 50): (1.99e-4, 2.38e-4, 2.15e-4, 2.40e-4, 8.79, 7.78),
    ("VM(π/2,1)", 50): (3.63e-4, 3.08e-4, 3.18e-4, 3.57e-4, 12.1, 11.3),
    ("VM(π,1)", 50): (3.73e-4, 5.93e-4, 4.72e-4, 5.05e-4, 6.24, 5.19),
    ("Mix(VM(0,5),VM(π/2,1),0.5)", 50): (1.91e-4, 1.80e-4, 1.77e-4, 1.93e-4, 10.6, 11.5),
    ("Mix(VM(0,5),VM(π/2,5),0.5)", 50): (1.80e-4, 1.29e-4, 1.41e-4, 1.36e-4, 15.6, 17.8),
    ("Mix(VM(0,5),VM(π/2,1),0.2)", 50): (2.23e-4, 2.15e-4, 2.09e-4, 2.49e-4, 9.97, 9.73),
    ("Mix(VM(0,5),VM(π/2,1),0.8)", 50): (2.03e-4, 1.09e-4, 1.37e-4, 1.04e-4, 17.7, 19.6),
    ("Mix(VM(0,1),VM(π/2,1),0.5)", 50): (2.04e-4, 2.54e-4, 2.23e-4, 2.55e-4, 7.28, 6.80),
    ("Mix(VM(0,1),VM(π/2,1),0.2)", 50): (2.42e-4, 2.33e-4, 2.27e-4, 2.64e-4, 9.42, 9.15),
    ("Mix(VM(0,5),VM(π,5),0.5)", 50): (2.20e-4, 3.10e-4, 2.52e-4, 2.44e-4, 3.77, 6.69),
    ("VM(0,5)", 200): (1.68e-4, 2.11e-5, 9.23e-6, 2.40e-6, 82.9, 82.0),
    ("VM(π/2,5)", 200): (3.62e-4, 4.14e-5, 1.64e-5, 2.86e-6, 110.0, 109.0),
    ("VM(π,5)", 200): (2.16e-4, 7.39e-5, 6.88e-5, 7.76e-5, 22.2, 21.1),
    ("VM(0,1)", 200): (2.10e-5, 1.52e-5, 1.50e-5, 1.60e-5, 18.3, 17.5),
    ("VM(π/2,1)", 200): (8.94e-5, 3.97e-5, 3.25e-5, 3.01e-5, 28.3, 27.8),
    ("VM(π,1)", 200): (3.55e-5, 3.75e-5, 4.26e-5, 4.14e-5, 11.0, 10.2),
    ("Mix(VM(0,5),VM(π/2,1),0.5)", 200): (4.14e-5, 1.82e-5, 1.57e-5, 1.54e-5, 23.5, 28.2),
    ("Mix(VM(0,5),VM(π/2,5),0.5)", 200): (6.26e-5, 1.78e-5, 1.30e-5, 1.04e-5, 38.6, 46.9),
    ("Mix(VM(0,5),VM(π/2,1),0.2)", 200): (5.37e-4, 2.74e-5, 2.39e-5, 2.42e-5, 21.5, 23.2),
    ("Mix(VM(0,5),VM(π/2,1),0.8)", 200): (8.87e-5, 1.89e-5, 1.17e-5, 7.05e-6, 44.7, 52.3),
    ("Mix(VM(0,1),VM(π/2,1),0.5)", 200): (2.08e-5, 1.71e-5, 1.81e-5, 2.05e-5, 14.5, 14.7),
    ("Mix(VM(0,1),VM(π/2,1),0.2)", 200): (5.04e-5, 2.77e-5, 2.51e-5, 2.70e-5, 21.0, 21.5),
    ("Mix(VM(0,5),VM(π,5),0.5)", 200): (4.09e-5, 2.66e-5, 2.87e-5, 7.57e-5, 3.72, 14.4),
}

CDF_AUTO_COLUMNS = ("m=5", "m=10", "m=sqrt(n)", "m=m_OP", "avg m_OP", "avg theta0", "theta0_TH")

# Antipodal mixtures have two theoretical minimizers; the reference entry is |θ₀|
CDF_ESTIMATED_ORIGIN = {
    ("VM(0,5)", 50): (2.47e-4, 6.88e-5, 1.19e-4, 4.27e-5, 30.4, -3.14, -3.14),
    ("VM(π/2,5)", 50): (2.47e-4, 6.88e-5, 1.19e-4, 4.27e-5, 30.4, -1.56, -1.57),
    ("VM(π,5)", 50): (2.47e-4, 6.88e-5, 1.19e-4, 4.27e-5, 30.4, 0.01, 0.00),
    ("VM(0,1)", 50): (2.42e-4, 2.44e-4, 2.39e-4, 2.54e-4, 8.87, -3.11, -3.14),
    ("VM(π/2,1)", 50): (2.42e-4, 2.44e-4, 2.39e-4, 2.54e-4, 8.87, -1.55, -1.57),
    ("VM(π,1)", 50): (2.42e-4, 2.44e-4, 2.39e-4, 2.54e-4, 8.87, 0.02, 0.00),
    ("Mix(VM(0,5),VM(π/2,1),0.5)", 50): (2.70e-4, 2.41e-4, 2.49e-4, 2.56e-4, 10.4, -2.40, -2.52),
    ("Mix(VM(0,5),VM(π/2,5),0.5)", 50): (1.54e-4, 1.28e-4, 1.33e-4, 1.35e-4, 14.1, -2.36, -2.36),
    ("Mix(VM(0,5),VM(π/2,1),0.2)", 50): (2.28e-4, 2.42e-4, 2.32e-4, 2.44e-4, 8.00, -1.94, -1.98),
    ("Mix(VM(0,5),VM(π/2,1),0.8)", 50): (2.48e-4, 1.28e-4, 1.67e-4, 1.16e-4, 18.4, -2.70, -2.94),
    ("Mix(VM(0,1),VM(π/2,1),0.5)", 50): (3.03e-4, 3.41e-4, 3.20e-4, 3.25e-4, 6.39, -2.37, -2.36),
    ("Mix(VM(0,1),VM(π/2,1),0.2)", 50): (2.24e-4, 2.45e-4, 2.32e-4, 2.43e-4, 7.18, -1.86, -1.85),
    ("Mix(VM(0,5),VM(π,5),0.5)", 50): (5.25e-4, 5.22e-4, 5.14e-4, 5.81e-5, 4.16, 1.58, 1.57),
    ("VM(0,5)", 200): (1.71e-4, 2.17e-5, 9.62e-6, 2.72e-6, 83.3, -3.14, -3.14),
    ("VM(π/2,5)", 200): (1.71e-4, 2.17e-5, 9.62e-6, 2.72e-6, 83.3, -1.57, -1.57),
    ("VM(π,5)", 200): (1.71e-4, 2.17e-5, 9.62e-6, 2.72e-6, 83.3, 0.00, 0.00),
    ("VM(0,1)", 200): (2.81e-5, 2.02e-5, 1.94e-5, 2.00e-5, 18.3, -3.13, -3.14),
    ("VM(π/2,1)", 200): (2.81e-5, 2.02e-5, 1.94e-5, 2.00e-5, 18.3, -1.58, -1.57),
    ("VM(π,1)", 200): (2.81e-5, 2.02e-5, 1.94e-5, 2.00e-5, 18.3, 0.00, 0.00),
    ("Mix(VM(0,5),VM(π/2,1),0.5)", 200): (3.62e-5, 1.80e-5, 1.57e-5, 1.55e-5, 22.3, -2.49, -2.52),
    ("Mix(VM(0,5),VM(π/2,5),0.5)", 200): (4.19e-5, 1.45e-5, 1.15e-5, 1.00e-5, 34.0, -2.36, -2.36),
    ("Mix(VM(0,5),VM(π/2,1),0.2)", 200): (2.58e-4, 2.05e-5, 2.02e-5, 2.09e-5, 15.5, -1.98, -1.98),
    ("Mix(VM(0,5),VM(π/2,1),0.8)", 200): (9.14e-5, 2.01e-5, 1.26e-5, 7.42e-6, 45.1, -2.88, -2.94),
    ("Mix(VM(0,1),VM(π/2,1),0.5)", 200): (1.89e-5, 1.82e-5, 1.90e-5, 1.95e-5, 11.6, -2.35, -2.36),
    ("Mix(VM(0,1),VM(π/2,1),0.2)", 200): (2.06e-5, 1.74e-5, 1.75e-5, 1.83e-5, 14.0, -1.85, -1.85),
    ("Mix(VM(0,5),VM(π,5),0.5)", 200): (6.78e-5, 3.89e-5, 3.57e-5, 9.73e-5, 4.10, 1.58, 1.57),
}

APPENDIX_B_COLUMNS = ("col1", "col2", "col3")

APPENDIX_B = {
    50: (1.29874, -0.18366, 1.11508),
    100: (1.26966, -0.13840, 1.13125),
    200: (1.25469, -0.11518, 1.13951),
    400: (1.24710, -0.10342, 1.14368),
    800: (1.24328, -0.09750, 1.14578),
    1600: (1.24136, -0.09453, 1.14683),
    3200: (1.24040, -0.09305, 1.14735),
    6400: (1.23992, -0.09230, 1.14762),
    12800: (1.23968, -0.09193, 1.14775),
}
