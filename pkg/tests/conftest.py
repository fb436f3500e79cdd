"""Shared fixtures for the test suite."""

import numpy as np
import pytest
from hypothesis import settings

from gad_negativity.core.state import fano_to_density, make_bell_diagonal, singlet

settings.register_profile("default", max_examples=50, deadline=None, derandomize=True)
settings.load_profile("default")


@pytest.fixture
def rng():
    """Seeded generator for random physical states."""
    return np.random.default_rng(12345)


@pytest.fixture
def singlet_rho():
    return fano_to_density(singlet())


@pytest.fixture
def diag_state():
    return make_bell_diagonal(-0.1, -0.2, -0.7)


@pytest.fixture
def werner_half():
    """Werner state x = -0.5, entangled with negativity 0.25."""
    return make_bell_diagonal(-0.5, -0.5, -0.5)
