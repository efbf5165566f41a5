"""
Monte Carlo experiments on a single table cell
"""

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import partial

import numpy as np

from deconv.error_models import ErrorKind, ErrorModel, convolve_model, sample_errors
from deconv.estimators import berkson_estimate, check_feasible, classical_estimate
from estimators.cdf import cdf_estimate
from estimators.density import density_estimate
from estimators.sample import AngleSample, default_grid
from kernelmath.fejer import fejer_weights, wrap_angle
from models.distributions import rounded_coefficients
from models.functionals import theoretical_origin, theta1_from_coeffs, theta2_from_coeffs, variance_functional
from models.generator import RngStream, round_to_step, sample
from models.risk import MiseAccumulator, cdf_amise, classical_wl_amise, density_amise, ise, mise_exact
from selection.bandwidth import (m_opt_cdf, m_opt_cdf_from_model, m_opt_classical_wl, m_opt_density,
                                 nearest_order, theta1_nonparametric, theta1_parametric_vm)
from selection.origin import select_origin
from utils.config import DEFAULT_GRID_SIZE, DEFAULT_REPLICATIONS, FALLBACK_SEED
from utils.exceptions import ConfigurationError, DegenerateSampleError, InfeasibleDeconvolutionError
from utils.logger import get_logger

logger = get_logger(__name__)


class MRuleKind(Enum):
    FIXED = "fixed"
    SQRT_N = "sqrt-n"
    OPT_PARAMETRIC = "opt-parametric"
    OPT_NONPARAMETRIC = "opt-nonparametric"


@dataclass(frozen=True)
class MRule:
    kind: MRuleKind
    m: int = None

    @classmethod
    def fixed(cls, m):
        if int(m) != m or m < 1:
            raise ConfigurationError(f"fixed order must be a positive integer, got {m!r}")
        return cls(MRuleKind.FIXED, int(m))

    @classmethod
    def sqrt_n(cls):
        return cls(MRuleKind.SQRT_N)

    @classmethod
    def parametric(cls):
        return cls(MRuleKind.OPT_PARAMETRIC)

    @classmethod
    def nonparametric(cls):
        return cls(MRuleKind.OPT_NONPARAMETRIC)

    @property
    def data_driven(self):
        return self.kind in (MRuleKind.OPT_PARAMETRIC, MRuleKind.OPT_NONPARAMETRIC)

    def __str__(self):
        if self.kind is MRuleKind.FIXED:
            return f"m={self.m}"
        return {MRuleKind.SQRT_N: "m=sqrt(n)", MRuleKind.OPT_PARAMETRIC: "m=m_OP",
                MRuleKind.OPT_NONPARAMETRIC: "m=m_ON"}[self.kind]


class Target(Enum):
    DENSITY = "density"
    CDF = "cdf"
    BERKSON = "berkson"
    CLASSICAL = "classical"


@dataclass(frozen=True)
class ExperimentSpec:
    """
    One table cell.

    Berkson runs observe X* from model and estimate the law of X* + err; with rounding_step set
    they observe the model rounded to that step and estimate the model itself. Classical runs
    observe X + err and estimate the model. assumed_err is the error law the estimator uses and
    defaults to err.
    """
    model: object
    n: int
    m_rule: MRule
    replications: int = DEFAULT_REPLICATIONS
    target: Target = Target.DENSITY
    err: ErrorModel = field(default_factory=ErrorModel.none)
    assumed_err: ErrorModel = None
    rounding_step: float = None
    origin: float = -np.pi
    origin_auto: bool = False
    master_seed: int = FALLBACK_SEED
    grid_size: int = DEFAULT_GRID_SIZE
    wl_rule_parameter: float = None

    def __post_init__(self):
        if self.replications < 1:
            raise ConfigurationError(f"replications must be at least 1, got {self.replications}")
        if int(self.n) != self.n or self.n < 1:
            raise ConfigurationError(f"sample size must be a positive integer, got {self.n!r}")
        if self.assumed_err is None:
            object.__setattr__(self, "assumed_err", self.err)
        if self.target is Target.CDF and self.m_rule.kind is MRuleKind.OPT_NONPARAMETRIC:
            raise ConfigurationError("no nonparametric order rule exists for the CDF")
        if (self.target is Target.CLASSICAL and self.m_rule.data_driven
                and self.assumed_err.kind is not ErrorKind.WRAPPED_LAPLACE):
            raise ConfigurationError("the classical order rule needs a wrapped Laplace error")

    @property
    def rule_rho(self):
        """Laplace scale entering the classical order rule; 1/ρ of the assumed error unless overridden."""
        if self.wl_rule_parameter is not None:
            return self.wl_rule_parameter
        return 1.0 / self.assumed_err.parameter

    def truth(self):
        """Model whose density or CDF is being estimated."""
        if self.target is Target.BERKSON and self.rounding_step is None:
            return convolve_model(self.model, self.err)
        return self.model


@dataclass
class ExperimentResult:
    mise: float
    mise_se: float
    avg_m: float
    m_theoretical: float
    replications: int
    failures: int = 0
    avg_theta0: float = None
    avg_abs_theta0: float = None
    theta0_theoretical: float = None
    mise_exact: float = None
    amise_theoretical: float = None
    per_replication: np.ndarray = None


@dataclass(frozen=True)
class ReplicationOutcome:
    ise: float = None
    m: int = None
    theta0: float = None
    error: str = None


def _observe(spec, generator):
    """Sample as the estimator sees it."""
    drawn = sample(spec.model, spec.n, generator)
    if spec.rounding_step is not None:
        return round_to_step(drawn, spec.rounding_step)
    if spec.target is Target.CLASSICAL and not spec.err.is_none:
        return AngleSample(drawn.angles + sample_errors(spec.err, spec.n, generator))
    return drawn


def select_order(spec, observed, origin=None):
    """Order m for one replication."""
    rule = spec.m_rule
    if rule.kind is MRuleKind.FIXED:
        return rule.m
    if rule.kind is MRuleKind.SQRT_N:
        return nearest_order(math.sqrt(spec.n))
    if spec.target is Target.CDF:
        return m_opt_cdf(observed, spec.n, origin).m

    if rule.kind is MRuleKind.OPT_PARAMETRIC:
        theta1 = theta1_parametric_vm(observed)
    else:
        theta1 = theta1_nonparametric(observed)
    if spec.target is Target.CLASSICAL:
        return m_opt_classical_wl(theta1, spec.n, spec.rule_rho).m
    return m_opt_density(theta1, spec.n).m


def run_replication(spec, stream_id):
    """
    One replication on stream stream_id.

    Returns:
        ReplicationOutcome; infeasible deconvolution and degenerate samples are reported, not raised
    """
    generator = RngStream(spec.master_seed, stream_id).generator()
    grid = default_grid(spec.grid_size)
    try:
        observed = _observe(spec, generator)
        if spec.target is Target.CDF:
            origin = select_origin(observed).theta0 if spec.origin_auto else spec.origin
            m = select_order(spec, observed, origin)
            estimate = cdf_estimate(observed, m, origin=origin, grid=grid)
            return ReplicationOutcome(ise(estimate, spec.truth()), m, origin)

        m = select_order(spec, observed)
        if spec.target is Target.BERKSON:
            estimate = berkson_estimate(observed, m, spec.assumed_err, grid, report=False)
        elif spec.target is Target.CLASSICAL:
            estimate = classical_estimate(observed, m, spec.assumed_err, grid, report=False)
        else:
            estimate = density_estimate(observed, m, grid)
        return ReplicationOutcome(ise(estimate, spec.truth()), m)
    except (InfeasibleDeconvolutionError, DegenerateSampleError) as e:
        return ReplicationOutcome(error=str(e))


def m_theoretical(spec):
    """Real-valued order the rule would pick knowing the truth; origin too for CDF runs."""
    truth = spec.truth()
    if spec.target is Target.CDF:
        origin = theoretical_origin(truth)[0] if spec.origin_auto else spec.origin
        return m_opt_cdf_from_model(truth, spec.n, origin).m_real, origin
    theta1 = theta1_from_coeffs(truth.fourier_coeffs())
    if spec.target is Target.CLASSICAL and spec.assumed_err.kind is ErrorKind.WRAPPED_LAPLACE:
        return m_opt_classical_wl(theta1, spec.n, spec.rule_rho).m_real, None
    return m_opt_density(theta1, spec.n).m_real, None


def amise_theoretical(spec, m_real, origin=None):
    """
    Asymptotic MISE of the truth at a real-valued order, None for Berkson targets or m_real < 1.

    Args:
        spec: ExperimentSpec
        m_real: Order, usually m_theoretical(spec)
        origin: CDF origin, spec.origin when None
    """
    if spec.target is Target.BERKSON or m_real is None or m_real < 1.0:
        return None
    truth = spec.truth()
    coeffs = truth.fourier_coeffs()
    if spec.target is Target.CDF:
        origin = spec.origin if origin is None else origin
        return cdf_amise(variance_functional(truth, origin), theta2_from_coeffs(coeffs, origin),
                         float(truth.density(origin)), m_real, spec.n)
    theta1 = theta1_from_coeffs(coeffs)
    if spec.target is Target.CLASSICAL:
        if spec.assumed_err.kind is not ErrorKind.WRAPPED_LAPLACE:
            return None
        return classical_wl_amise(theta1, m_real, spec.n, spec.rule_rho)
    return density_amise(theta1, m_real, spec.n)


def exact_mise(spec, m):
    """
    Exact MISE of a fixed-order density run, None for CDF targets.

    Raises:
        InfeasibleDeconvolutionError: for a classical run with a vanishing λ below m
    """
    if spec.target is Target.CDF:
        return None
    model_coeffs = spec.model.fourier_coeffs()
    order = max(m, model_coeffs.order)
    if spec.rounding_step is not None:
        observed = rounded_coefficients(spec.model, spec.rounding_step, order)
    elif spec.target is Target.CLASSICAL:
        observed = convolve_model(model_coeffs, spec.err)
    else:
        observed = model_coeffs

    transfer = fejer_weights(m)
    if spec.target is Target.BERKSON:
        transfer = transfer * spec.assumed_err.lambdas(m)
    elif spec.target is Target.CLASSICAL:
        transfer = transfer / check_feasible(spec.assumed_err, m)
    return mise_exact(transfer, observed, spec.truth().fourier_coeffs(), spec.n)


def _circular_mean(angles):
    return float(wrap_angle(np.angle(np.mean(np.exp(1j * np.asarray(angles))))))


def run_experiment(spec, workers=1, keep_replications=False):
    """
    Monte Carlo MISE of one cell.

    Replication r uses stream r of the master seed, and outcomes are merged in stream order,
    so the result does not depend on workers.

    Args:
        spec: ExperimentSpec
        workers: Processes; 1 runs in this process
        keep_replications: Keep the ISE of every completed replication

    Returns:
        ExperimentResult
    """
    replicate = partial(run_replication, spec)
    streams = range(spec.replications)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(replicate, streams, chunksize=max(1, spec.replications // (4 * workers))))
    else:
        outcomes = [replicate(r) for r in streams]

    accumulator = MiseAccumulator()
    orders = []
    origins = []
    errors = []
    for outcome in outcomes:
        if outcome.error is not None:
            errors.append(outcome.error)
            continue
        accumulator.add(outcome.ise)
        orders.append(outcome.m)
        if outcome.theta0 is not None:
            origins.append(outcome.theta0)

    if errors:
        logger.warning(f"{len(errors)} of {spec.replications} replications aborted; first: {errors[0]}")
    if accumulator.count == 0:
        raise DegenerateSampleError(f"all {spec.replications} replications aborted: {errors[0]}")

    m_th, origin_th = m_theoretical(spec)
    exact = None
    if not spec.m_rule.data_driven:
        try:
            exact = exact_mise(spec, select_order(spec, None))
        except InfeasibleDeconvolutionError:
            exact = None

    per_replication = None
    if keep_replications:
        per_replication = np.array([o.ise for o in outcomes if o.error is None])
    return ExperimentResult(
        mise=accumulator.mean,
        mise_se=accumulator.standard_error,
        avg_m=float(np.mean(orders)),
        m_theoretical=m_th,
        replications=accumulator.count,
        failures=len(errors),
        avg_theta0=_circular_mean(origins) if origins else None,
        avg_abs_theta0=float(np.mean(np.abs(origins))) if origins else None,
        theta0_theoretical=origin_th if spec.origin_auto else None,
        mise_exact=exact,
        amise_theoretical=amise_theoretical(spec, m_th, origin_th) if spec.m_rule.data_driven else None,
        per_replication=per_replication,
    )
