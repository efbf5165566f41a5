"""
Subcommands: density, cdf and reproduce
"""

import json
import math
import os
import sys
from contextlib import contextmanager

import numpy as np

from cli.inputs import InputSpec, parse_angle, parse_error_model
from cli.rainfall import load_rainfall
from deconv.error_models import ErrorKind
from deconv.estimators import berkson_estimate, classical_estimate
from estimators.cdf import cdf_estimate
from estimators.density import density_estimate
from estimators.sample import default_grid
from harness.experiment import MRule, MRuleKind
from harness.report import write_grid, write_table
from harness.tables import TABLE_IDS, TableSettings, run_table
from selection.bandwidth import (m_opt_cdf, m_opt_classical_wl, m_opt_density, nearest_order,
                                 theta1_nonparametric, theta1_parametric_vm)
from selection.origin import criterion_cn, criterion_profile, select_origin
from utils.config import default_seed
from utils.exceptions import ConfigurationError, InputError
from utils.logger import get_logger
from utils.performance_metrics import PerformanceMetrics

logger = get_logger(__name__)

M_RULES = ("sqrt-n", "opt-parametric", "opt-nonparametric")


def parse_m_rule(text):
    """
    Parse an order rule: a positive integer, 'sqrt-n', 'opt-parametric' or 'opt-nonparametric'.

    Returns:
        MRule
    """
    text = str(text).strip().lower()
    if text == "sqrt-n":
        return MRule.sqrt_n()
    if text == "opt-parametric":
        return MRule.parametric()
    if text == "opt-nonparametric":
        return MRule.nonparametric()
    try:
        return MRule.fixed(int(text))
    except ValueError:
        raise ConfigurationError(f"--m must be a positive integer or one of {', '.join(M_RULES)}, got {text!r}")


def parse_angle_list(text):
    return np.array([parse_angle(part) for part in str(text).split(",") if part.strip()])


def load_sample(args):
    """Sample from the input file, stdin, or the embedded rainfall data."""
    if args.rainfall:
        if args.input not in (None, "-"):
            raise ConfigurationError("give either an input file or --rainfall, not both")
        return load_rainfall(parse_angle(args.rainfall_phase))
    return InputSpec(args.input or "-", degrees=args.degrees, grouped=True if args.grouped else None).load()


def evaluation_grid(args):
    if args.at:
        grid = parse_angle_list(args.at)
        if grid.size == 0:
            raise InputError("--at lists no angles")
        return np.deg2rad(grid) if args.degrees else grid
    return default_grid(args.grid)


def _theta1(args, sample):
    if args.m_rule.kind is MRuleKind.OPT_PARAMETRIC:
        return theta1_parametric_vm(sample)
    return theta1_nonparametric(sample, M=args.M, unbiased=args.unbiased)


def select_density_order(args, sample, err, classical):
    """
    Order for the density command.

    Returns:
        (m, header dict describing the choice)
    """
    rule = args.m_rule
    n = sample.n_effective
    if rule.kind is MRuleKind.FIXED:
        return rule.m, {"rule": "fixed"}
    if rule.kind is MRuleKind.SQRT_N:
        return nearest_order(math.sqrt(n)), {"rule": "sqrt-n"}

    theta1 = _theta1(args, sample)
    if classical:
        if err.kind is not ErrorKind.WRAPPED_LAPLACE:
            raise ConfigurationError("the classical order rule needs a wrapped Laplace error")
        result = m_opt_classical_wl(theta1, n, 1.0 / err.parameter)
    else:
        result = m_opt_density(theta1, n)
    header = {
        "rule": rule.kind.value,
        "m_real": f"{result.m_real:.6g}",
        "theta1_hat": f"{theta1.value:.6g}",
        "method": theta1.method.value,
    }
    if theta1.M_used is not None:
        header["M"] = theta1.M_used
    if theta1.kappa_hat is not None:
        header["kappa_hat"] = f"{theta1.kappa_hat:.6g}"
    flags = theta1.flags + result.flags
    if flags:
        header["flags"] = ";".join(flags)
    return result.m, header


@contextmanager
def output_stream(path):
    if path in (None, "-"):
        yield sys.stdout
        return
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as stream:
        yield stream


def emit(estimate, header, args):
    """Write the estimate grid as CSV with comment header lines, or as one JSON object."""
    with output_stream(args.output) as stream:
        if args.format == "json":
            document = {"header": header, "theta": estimate.theta.tolist(), "value": estimate.values.tolist()}
            json.dump(document, stream, indent=2)
            stream.write("\n")
        else:
            write_grid(estimate.theta, estimate.values, stream, header)
    if args.plot:
        save_plot(estimate, args.plot, header)


def save_plot(estimate, path, header):
    """Static PNG of an estimate grid."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    order = np.argsort(estimate.theta)
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(estimate.theta[order], estimate.values[order], color="tab:blue")
    ax.set_xlim(-np.pi, np.pi)
    ax.set_xticks([-np.pi, -np.pi / 2, 0.0, np.pi / 2, np.pi])
    ax.set_xticklabels(["-π", "-π/2", "0", "π/2", "π"])
    ax.set_xlabel("θ")
    ax.set_ylabel(estimate.kind.value)
    ax.set_title(f"Fejér {estimate.kind.value} estimate, m = {header['m']}")
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    logger.info(f"Plot written to {path}")


def cmd_density(args):
    """Density estimate of a sample, optionally corrected for Berkson or classical error."""
    if args.berkson and args.classical:
        raise ConfigurationError("--berkson and --classical are mutually exclusive")
    args.m_rule = parse_m_rule(args.m)
    sample = load_sample(args)
    grid = evaluation_grid(args)
    err = parse_error_model(args.berkson or args.classical or "none")
    classical = bool(args.classical)
    logger.info(f"{sample!r}, error {err}")

    m, header = select_density_order(args, sample, err, classical)
    header = {"kind": "density", "n": f"{sample.n_effective:g}", "m": m, **header}
    if err.is_none:
        estimate = density_estimate(sample, m, grid)
    else:
        header["error"] = f"{'classical' if classical else 'berkson'} {err}"
        if classical:
            estimate = classical_estimate(sample, m, err, grid, clip=args.clip)
        else:
            estimate = berkson_estimate(sample, m, err, grid, clip=args.clip)
        header["negative_mass"] = f"{estimate.negative_mass:.6g}"
        if estimate.flags:
            header["estimate_flags"] = ";".join(estimate.flags)
    emit(estimate, header, args)
    return 0


def parse_origin(text):
    """'auto' or 'fixed:ANGLE'; returns None for auto."""
    text = str(text).strip().lower()
    if text == "auto":
        return None
    kind, _, value = text.partition(":")
    if kind != "fixed" or not value:
        raise ConfigurationError(f"--origin must be 'auto' or 'fixed:ANGLE', got {text!r}")
    return parse_angle(value)


def cmd_cdf(args):
    """CDF estimate anchored at a fixed or data-selected origin."""
    args.m_rule = parse_m_rule(args.m)
    if args.m_rule.kind is MRuleKind.OPT_NONPARAMETRIC:
        raise ConfigurationError("no nonparametric order rule exists for the CDF")
    sample = load_sample(args)
    grid = evaluation_grid(args)
    origin = parse_origin(args.origin)

    header = {"kind": "cdf", "n": f"{sample.n_effective:g}"}
    if origin is None:
        chosen = select_origin(sample)
        origin = chosen.theta0
        header.update({
            "origin": "auto",
            "criterion_min": f"{chosen.criterion_min:.6g}",
            "criterion_max": f"{chosen.criterion_max:.6g}",
            "minimizing_arc": f"{chosen.minimizing_arc[0]:.6g} {chosen.minimizing_arc[1]:.6g}",
        })
    else:
        header["origin"] = "fixed"
        if len(sample) >= 2:
            header["criterion"] = f"{criterion_cn(sample, origin):.6g}"
    header["theta0"] = f"{origin:.17g}"

    rule = args.m_rule
    if rule.kind is MRuleKind.FIXED:
        m = rule.m
    elif rule.kind is MRuleKind.SQRT_N:
        m = nearest_order(math.sqrt(sample.n_effective))
    else:
        result = m_opt_cdf(sample, origin=origin)
        m = result.m
        header["m_real"] = f"{result.m_real:.6g}"
        header["c"] = f"{result.auxiliary['c']:.6g}"
        if result.flags:
            header["flags"] = ";".join(result.flags)
    header = {"kind": "cdf", "m": m, **header}

    if args.criterion_out:
        profile_grid = default_grid(args.grid)
        with output_stream(args.criterion_out) as stream:
            write_grid(profile_grid, criterion_profile(sample, profile_grid), stream, {"kind": "criterion"})

    emit(cdf_estimate(sample, m, origin=origin, grid=grid), header, args)
    return 0


def parse_sizes(text):
    if not text:
        return None
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise ConfigurationError(f"--sizes must list integers, got {text!r}")


def cmd_reproduce(args):
    """Reproduce one table, or all of them, as CSV."""
    table_ids = TABLE_IDS if args.table.lower() == "all" else (args.table.lower(),)
    settings = TableSettings(
        replications=args.n_reps,
        master_seed=default_seed() if args.seed is None else args.seed,
        workers=args.workers,
        laplace_reading=args.laplace_reading,
        sizes=parse_sizes(args.sizes),
    )
    metrics = PerformanceMetrics() if args.profile else None

    for table_id in table_ids:
        if metrics:
            metrics.start_timer(table_id)
        result = run_table(table_id, settings)
        if metrics:
            metrics.stop_timer(table_id)
            cells = sum(1 for row in result.rows for name in result.columns if name.startswith("m="))
            metrics.record_replications(table_id, cells * settings.replications)

        if args.output_dir:
            path = os.path.join(args.output_dir, f"{table_id}.csv")
            with output_stream(path) as stream:
                write_table(result, stream)
            logger.info(f"Table {table_id} written to {path}")
        else:
            if len(table_ids) > 1:
                sys.stdout.write(f"# table: {table_id}\n")
            write_table(result, sys.stdout)
        flagged = sum(1 for row in result.rows if row.get("flags"))
        if flagged:
            logger.warning(f"Table {table_id}: {flagged} of {len(result.rows)} rows outside tolerance")

    if metrics:
        print(metrics.get_report(), file=sys.stderr)
    return 0
