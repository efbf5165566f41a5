"""
Root pytest configuration: makes the top-level packages importable
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: Monte Carlo reproductions taking more than a few seconds")
