#!/usr/bin/env python3
"""
Fejér circular estimation - Main Entry Point
"""

import argparse
import sys
import os

# Ensure all packages are in the Python path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

# Import after path setup
from cli.commands import cmd_cdf, cmd_density, cmd_reproduce
from utils.config import DEFAULT_GRID_SIZE, DEFAULT_REPLICATIONS, SEED_ENV_VAR
from utils.exceptions import FejerError
from utils.logger import Logger


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with 1 like every other parse error; 2 means infeasible deconvolution"""
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def add_input_arguments(parser):
    parser.add_argument('input', nargs='?', default='-',
                        help="File with one angle per line or 'angle,count' pairs ('-' for stdin)")
    parser.add_argument('--rainfall', action='store_true',
                        help='Use the embedded monthly rainfall frequencies')
    parser.add_argument('--rainfall-phase', default='0',
                        help='Shift of the month angles, e.g. -pi/12 to start January at -pi')
    parser.add_argument('--degrees', action='store_true',
                        help='Input and --at angles are in degrees')
    parser.add_argument('--grouped', action='store_true',
                        help="Read 'angle,count' pairs even when the first line has one field")


def add_output_arguments(parser):
    parser.add_argument('--m', default='opt-parametric',
                        help='Order: a positive integer, sqrt-n, opt-parametric or opt-nonparametric')
    parser.add_argument('--grid', type=int, default=DEFAULT_GRID_SIZE,
                        help='Points of the equispaced evaluation grid on [-pi, pi)')
    parser.add_argument('--at', default=None,
                        help='Comma-separated evaluation angles instead of the grid')
    parser.add_argument('--format', choices=['csv', 'json'], default='csv',
                        help='Output format')
    parser.add_argument('--output', default=None,
                        help='Output file (default: stdout)')
    parser.add_argument('--plot', default=None,
                        help='Also write a PNG figure of the estimate')


def parse_arguments(argv=None):
    """Parse command line arguments"""
    parser = ArgumentParser(description='Fejér density and distribution-function estimation on the circle')
    parser.add_argument('--log-level', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                        default='WARNING', help='Logging level')
    parser.add_argument('--log-file', type=str, default=None,
                        help='Log file path (default: stderr only)')
    commands = parser.add_subparsers(dest='command', required=True)

    density = commands.add_parser('density', help='Estimate a density')
    add_input_arguments(density)
    add_output_arguments(density)
    density.add_argument('--M', type=int, default=None,
                         help='Truncation of the nonparametric roughness estimate (default 2n^(1/4))')
    density.add_argument('--unbiased', action='store_true',
                         help='Use unbiased squared-coefficient estimates in the nonparametric rule')
    density.add_argument('--berkson', default=None, metavar='ERROR',
                         help='Berkson error: laplace:RHO, laplace-scale:S, uniform:A or vm:KAPPA')
    density.add_argument('--classical', default=None, metavar='ERROR',
                         help='Classical error to deconvolve, same forms as --berkson')
    density.add_argument('--clip', action='store_true',
                         help='Clip negative values and renormalize to unit mass')
    density.set_defaults(handler=cmd_density)

    cdf = commands.add_parser('cdf', help='Estimate a distribution function')
    add_input_arguments(cdf)
    add_output_arguments(cdf)
    cdf.add_argument('--origin', default='fixed:-pi',
                     help="'auto' or 'fixed:ANGLE' (default fixed:-pi)")
    cdf.add_argument('--criterion-out', default=None,
                     help='Write the origin criterion on the grid to this file')
    cdf.set_defaults(handler=cmd_cdf)

    reproduce = commands.add_parser('reproduce', help='Reproduce the simulation tables')
    reproduce.add_argument('--table', default='all',
                           help='t1, t2, t3, t4, t5, appendix-b or all')
    reproduce.add_argument('--n-reps', type=int, default=DEFAULT_REPLICATIONS,
                           help='Replications per cell')
    reproduce.add_argument('--seed', type=lambda text: int(text, 0), default=None,
                           help=f'Master seed (default: ${SEED_ENV_VAR} or a fixed fallback)')
    reproduce.add_argument('--workers', type=int, default=1,
                           help='Worker processes for the replications')
    reproduce.add_argument('--laplace-reading', choices=['rate', 'scale'], default='scale',
                           help='Read the WL parameter of t2 and t3 as a scale, rate 1/S, or as a rate')
    reproduce.add_argument('--sizes', default=None,
                           help='Comma-separated sample sizes to keep, e.g. 50')
    reproduce.add_argument('--output-dir', default=None,
                           help='Write <table>.csv files here instead of stdout')
    reproduce.add_argument('--profile', action='store_true',
                           help='Print time and memory per table to stderr')
    reproduce.set_defaults(handler=cmd_reproduce)
    return parser.parse_args(argv)


def main(argv=None):
    """Main function"""
    args = parse_arguments(argv)

    # Set up logging
    logger = Logger(level=args.log_level, log_file=args.log_file)
    logger.debug(f"Running {args.command}")

    try:
        return args.handler(args)
    except FejerError as e:
        logger.error(str(e))
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
