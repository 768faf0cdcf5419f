import logging

import pytest

from brownian_clausius.cli.config import RunConfig
from brownian_clausius.params import ModelParams

# Enable logging
logging.basicConfig(level=logging.INFO, format="%(asctime)s - %(message)s")


@pytest.fixture()
def unit_params() -> ModelParams:
    """Underdamped Drude oscillator at T = 1 in caption units."""
    return ModelParams.from_temperature(1.0, gamma=1.5)


@pytest.fixture()
def overdamped_params() -> ModelParams:
    """Strongly damped oscillator at low temperature in caption units."""
    return ModelParams.from_temperature(0.1, gamma=4.0)


@pytest.fixture()
def coarse_config() -> RunConfig:
    """A short temperature grid for CLI and figure tests."""
    return RunConfig(t_min=0.1, t_max=2.0, n_points=5)
