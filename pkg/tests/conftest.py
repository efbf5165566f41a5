"""
Shared fixtures
"""

import logging

import pytest

from models.distributions import VonMises, WrappedNormal
from models.generator import RngStream, sample
from utils.logger import ROOT_LOGGER


@pytest.fixture(autouse=True)
def reset_package_logger():
    """main() reconfigures the package logger; hand it back to pytest after each test."""
    yield
    logger = logging.getLogger(ROOT_LOGGER)
    for handler in logger.handlers:
        handler.close()
    logger.handlers = []
    logger.propagate = True
    logger.setLevel(logging.NOTSET)


@pytest.fixture
def rng():
    return RngStream(20240601, 0).generator()


@pytest.fixture
def vm_model():
    return VonMises(0.5, 2.0)


@pytest.fixture
def vm_sample(vm_model):
    return sample(vm_model, 100, RngStream(11, 0))


@pytest.fixture
def wn_model():
    return WrappedNormal(0.0, 0.75)
