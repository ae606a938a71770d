import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "documented_limit: asserts known, documented representation limits")
