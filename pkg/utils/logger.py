"""
Logging utility for Fejér estimation
"""

import logging
import os
import sys

ROOT_LOGGER = "fejer"

FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


def get_logger(name):
    """
    Child logger under the package root.

    Args:
        name: Module name, usually __name__

    Returns:
        A logging.Logger that inherits the handlers configured by Logger
    """
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")


class Logger:
    """Configures the package root logger for a command-line run"""

    LEVELS = {
        "DEBUG": logging.DEBUG,
        "INFO": logging.INFO,
        "WARNING": logging.WARNING,
        "ERROR": logging.ERROR,
        "CRITICAL": logging.CRITICAL
    }

    def __init__(self, name=ROOT_LOGGER, level="WARNING", log_file=None, console=True):
        """
        Initialize the logger.

        Args:
            name: Logger name
            level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
            log_file: Optional file path for logging
            console: Whether to log to stderr
        """
        self.logger = logging.getLogger(name)
        self.logger.setLevel(self.LEVELS.get(level.upper(), logging.WARNING))
        self.logger.propagate = False
        self.logger.handlers = []

        formatter = logging.Formatter(FORMAT, datefmt=DATE_FORMAT)

        # stdout carries CSV output
        if console:
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setFormatter(formatter)
            self.logger.addHandler(console_handler)

        if log_file:
            log_dir = os.path.dirname(log_file)
            if log_dir and not os.path.exists(log_dir):
                os.makedirs(log_dir)

            file_handler = logging.FileHandler(log_file)
            file_handler.setFormatter(formatter)
            self.logger.addHandler(file_handler)

    def debug(self, message):
        """Log a debug message"""
        self.logger.debug(message)

    def error(self, message):
        """Log a failed command"""
        self.logger.error(message)


class ExperimentLogger:
    """Records progress of a table reproduction"""
    def __init__(self, table_id, replications, seed):
        """
        Args:
            table_id: Table being reproduced
            replications: Replications per cell
            seed: Master seed
        """
        self.table_id = table_id
        self.logger = get_logger("harness")
        self.cells = 0
        self.aborted = 0
        self.logger.info(f"Table {table_id}: {replications} replications per cell, seed {seed}")

    def log_cell(self, label, mise, elapsed, failures=0):
        """
        Log a finished cell.

        Args:
            label: Row and column description
            mise: Monte Carlo MISE of the cell
            elapsed: Seconds spent on the cell
            failures: Replications aborted inside the cell
        """
        self.cells += 1
        self.aborted += failures
        self.logger.info(f"{self.table_id} {label}: MISE {mise:.6e} ({elapsed:.2f} s)")
        if failures:
            self.logger.warning(f"{self.table_id} {label}: {failures} replications aborted")

    def log_done(self, report):
        """Log the closing timing report"""
        self.logger.info(f"{self.table_id}: {self.cells} cells, {self.aborted} aborted replications")
        self.logger.debug(report)
