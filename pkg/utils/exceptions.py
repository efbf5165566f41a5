"""
Exception hierarchy for Fejér estimation
"""


class FejerError(ValueError):
    """Base class for all package errors"""
    exit_code = 1


class InputError(FejerError):
    """Unreadable or invalid input data"""
    exit_code = 1


class ConfigurationError(FejerError):
    """Experiment specification or command options that cannot be honoured"""
    exit_code = 1


class InfeasibleDeconvolutionError(FejerError):
    """An error coefficient vanishes inside the frequency range of the estimator"""
    exit_code = 2

    def __init__(self, frequency, value):
        """
        Args:
            frequency: First frequency l with a near-zero coefficient
            value: The coefficient λ(l)
        """
        self.frequency = frequency
        self.value = value
        super().__init__(
            f"error coefficient lambda({frequency}) = {value:.3e} is numerically zero; "
            f"reduce m below {frequency}"
        )


class DegenerateSampleError(FejerError):
    """Sample too small or too concentrated for the requested procedure"""
    exit_code = 3
