"""
Symmetric circular error laws
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.special import ive

from models.distributions import CircularModel, FourierCoefficients, density_from_coeffs
from models.generator import as_generator
from utils.exceptions import ConfigurationError


class ErrorKind(Enum):
    NONE = "none"
    WRAPPED_LAPLACE = "laplace"
    WRAPPED_UNIFORM = "uniform"
    VON_MISES = "vm"


@dataclass(frozen=True)
class ErrorModel:
    """
    Error density symmetric about zero, described by its Fourier coefficients λ(j).

    parameter is ρ for the wrapped Laplace, the half-width a for the wrapped uniform and κ for
    the von Mises error.
    """
    kind: ErrorKind = ErrorKind.NONE
    parameter: float = None

    def __post_init__(self):
        p = self.parameter
        if self.kind is ErrorKind.NONE:
            return
        if p is None or not np.isfinite(p):
            raise ConfigurationError(f"{self.kind.value} error needs a finite parameter")
        if self.kind is ErrorKind.WRAPPED_LAPLACE and not p > 0:
            raise ConfigurationError(f"wrapped Laplace rho must be positive, got {p!r}")
        if self.kind is ErrorKind.WRAPPED_UNIFORM and not 0 < p <= np.pi:
            raise ConfigurationError(f"uniform half-width must lie in (0, pi], got {p!r}")
        if self.kind is ErrorKind.VON_MISES and not p >= 0:
            raise ConfigurationError(f"von Mises error kappa must be nonnegative, got {p!r}")
        object.__setattr__(self, "parameter", float(p))

    @classmethod
    def none(cls):
        return cls(ErrorKind.NONE)

    @classmethod
    def wrapped_laplace(cls, rho):
        return cls(ErrorKind.WRAPPED_LAPLACE, rho)

    @classmethod
    def wrapped_uniform(cls, halfwidth):
        return cls(ErrorKind.WRAPPED_UNIFORM, halfwidth)

    @classmethod
    def von_mises(cls, kappa):
        return cls(ErrorKind.VON_MISES, kappa)

    @classmethod
    def wrapped_laplace_scale(cls, scale):
        """Wrapped Laplace with λ(j) = 1/(1 + scale²j²), i.e. ρ = 1/scale."""
        if not scale > 0:
            raise ConfigurationError(f"wrapped Laplace scale must be positive, got {scale!r}")
        return cls(ErrorKind.WRAPPED_LAPLACE, 1.0 / scale)

    @property
    def is_none(self):
        return self.kind is ErrorKind.NONE

    def __str__(self):
        labels = {
            ErrorKind.NONE: "none",
            ErrorKind.WRAPPED_LAPLACE: "WL({:g})",
            ErrorKind.WRAPPED_UNIFORM: "U({:g})",
            ErrorKind.VON_MISES: "VM({:g})",
        }
        return labels[self.kind].format(self.parameter)

    def lambdas(self, order):
        """
        Coefficients λ(j) for j = 1..order.

        Returns:
            Array in [-1, 1]
        """
        j = np.arange(1, order + 1, dtype=float)
        if self.kind is ErrorKind.NONE:
            return np.ones(order)
        if self.kind is ErrorKind.WRAPPED_LAPLACE:
            rho2 = self.parameter ** 2
            return rho2 / (rho2 + j ** 2)
        if self.kind is ErrorKind.WRAPPED_UNIFORM:
            # np.sinc(x) = sin(πx)/(πx), exactly zero at ja = kπ
            return np.sinc(j * self.parameter / np.pi)
        if self.parameter == 0.0:
            return np.zeros(order)
        return ive(j, self.parameter) / ive(0, self.parameter)


def sample_errors(err, n, rng):
    """
    Draw n errors.

    Args:
        err: ErrorModel
        n: Number of draws
        rng: RngStream or numpy Generator

    Returns:
        Unwrapped error values
    """
    generator = as_generator(rng)
    if err.kind is ErrorKind.NONE:
        return np.zeros(n)
    if err.kind is ErrorKind.WRAPPED_LAPLACE:
        scale = 1.0 / err.parameter
        return generator.exponential(scale, n) - generator.exponential(scale, n)
    if err.kind is ErrorKind.WRAPPED_UNIFORM:
        return generator.uniform(-err.parameter, err.parameter, n)
    return generator.vonmises(0.0, err.parameter, size=n)


@dataclass(frozen=True)
class ConvolvedModel(CircularModel):
    """Law of X + ε for X from base and independent error ε"""
    base: CircularModel
    err: ErrorModel

    def __str__(self):
        return f"{self.base}*{self.err}"

    def fourier_coeffs(self, order=None):
        coeffs = self.base.fourier_coeffs(order)
        return coeffs.scaled(self.err.lambdas(coeffs.order))

    def density(self, theta):
        return density_from_coeffs(self.fourier_coeffs(), np.asarray(theta, dtype=float))

    def draw(self, n, generator):
        return self.base.draw(n, generator) + sample_errors(self.err, n, generator)


def convolve_model(f_coeffs, err):
    """
    Coefficientwise product with the error coefficients, φ_{X+ε}(l) = φ_X(l)·λ(l).

    Args:
        f_coeffs: FourierCoefficients, or a CircularModel
        err: ErrorModel

    Returns:
        FourierCoefficients, or a ConvolvedModel for a model argument
    """
    if isinstance(f_coeffs, CircularModel):
        return f_coeffs if err.is_none else ConvolvedModel(f_coeffs, err)
    if not isinstance(f_coeffs, FourierCoefficients):
        raise TypeError(f"expected FourierCoefficients or CircularModel, got {type(f_coeffs).__name__}")
    return f_coeffs.scaled(err.lambdas(f_coeffs.order))
