"""
Tests for exceptions, configuration, logging and timing helpers
"""

import logging
import time

import pytest

from utils.config import FALLBACK_SEED, SEED_ENV_VAR, default_seed
from utils.exceptions import (ConfigurationError, DegenerateSampleError, FejerError, InfeasibleDeconvolutionError,
                              InputError)
from utils.logger import ROOT_LOGGER, ExperimentLogger, Logger, get_logger
from utils.performance_metrics import PerformanceMetrics
from utils.timer import Timer, TimingStats


class TestExceptions:
    @pytest.mark.parametrize("error,code", [
        (InputError("x"), 1),
        (ConfigurationError("x"), 1),
        (InfeasibleDeconvolutionError(12, 1e-17), 2),
        (DegenerateSampleError("x"), 3),
    ])
    def test_exit_codes(self, error, code):
        assert isinstance(error, FejerError)
        assert isinstance(error, ValueError)
        assert error.exit_code == code

    def test_infeasible_message(self):
        error = InfeasibleDeconvolutionError(12, 3.9e-17)
        assert "lambda(12)" in str(error)
        assert "below 12" in str(error)


class TestConfig:
    def test_seed_from_environment(self, monkeypatch):
        monkeypatch.setenv(SEED_ENV_VAR, "0x10")
        assert default_seed() == 16
        monkeypatch.setenv(SEED_ENV_VAR, "42")
        assert default_seed() == 42

    def test_fallback_seed(self, monkeypatch):
        monkeypatch.delenv(SEED_ENV_VAR, raising=False)
        assert default_seed() == FALLBACK_SEED
        monkeypatch.setenv(SEED_ENV_VAR, "  ")
        assert default_seed() == FALLBACK_SEED


class TestLogger:
    def test_file_output(self, tmp_path):
        path = tmp_path / "logs" / "run.log"
        logger = Logger(level="INFO", log_file=str(path), console=False)
        get_logger("cli").info("written to file")
        logger.debug("below the level")
        for handler in logging.getLogger(ROOT_LOGGER).handlers:
            handler.flush()
        text = path.read_text(encoding="utf-8")
        assert "fejer.cli - INFO - written to file" in text
        assert "below the level" not in text

    def test_unknown_level_falls_back_to_warning(self):
        Logger(level="verbose", console=False)
        assert logging.getLogger(ROOT_LOGGER).level == logging.WARNING

    def test_experiment_logger_counts(self, caplog):
        caplog.set_level(logging.INFO, logger=ROOT_LOGGER)
        log = ExperimentLogger("t1", 10, 7)
        log.log_cell("WN(0,0.75) n=50 m=5", 1.5e-3, 0.2)
        log.log_cell("WN(0,0.9) n=50 m=5", 2.5e-3, 0.3, failures=2)
        log.log_done("Timing Statistics:")
        assert log.cells == 2
        assert log.aborted == 2
        assert "2 replications aborted" in caplog.text
        assert "seed 7" in caplog.text


class TestTimer:
    def test_accumulates(self):
        timer = Timer("cell")
        with timer:
            time.sleep(0.01)
        first = timer.get_elapsed()
        assert first >= 0.01
        assert not timer.running
        with timer:
            time.sleep(0.01)
        assert timer.get_elapsed() > first
        assert str(timer).startswith("cell: ")
        assert timer.reset().get_elapsed() == 0.0

    def test_stats(self):
        stats = TimingStats()
        assert stats.get_stats("t1") is None
        stats.record("t1", 1.0)
        stats.record("t1", 3.0)
        summary = stats.get_stats("t1")
        assert summary["count"] == 2
        assert summary["avg"] == pytest.approx(2.0)
        assert summary["max"] == 3.0
        assert "t1: n=2" in stats.get_report()


class TestPerformanceMetrics:
    def test_report(self):
        metrics = PerformanceMetrics()
        metrics.start_timer("t1")
        metrics.record_replications("t1", 90)
        metrics.stop_timer("t1")
        metrics.start_timer("t2")
        report = metrics.get_report()
        assert "t1:" in report
        assert "Replications: 90" in report
        assert "Peak resident memory" in report
        assert "t2:" in report and "Time: running" in report

    def test_unknown_run_is_ignored(self):
        metrics = PerformanceMetrics()
        metrics.stop_timer("missing")
        metrics.record_replications("missing", 5)
        assert metrics.metrics == {}
