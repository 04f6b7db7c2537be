"""Shared fixtures; the repository root is put on sys.path by pytest"""
import math

import numpy as np
import pytest

from quantumEmergence.experiments import (
    ScenarioParams,
    coarse_grained_model,
    fine_grained_model,
)
from quantumEmergence.quantum import build_interferometer_isometry


@pytest.fixture
def rng():
    return np.random.default_rng(20220614)


@pytest.fixture
def isometry_zero_phase():
    return build_interferometer_isometry(0.0)


@pytest.fixture
def fine_tpm():
    return fine_grained_model(0.0)


@pytest.fixture
def eraser_params():
    return ScenarioParams(theta=math.pi / 4, gamma=0.0, phi=0.0)


@pytest.fixture
def eraser_tpm(eraser_params):
    return coarse_grained_model(eraser_params)
