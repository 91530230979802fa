"""Shared fixtures for the yhkernel test suite."""

import numpy as np
import pytest

from src.config.config import DEFAULT_SEED
from src.core.yokonuma import YParams
from src.utils.sampling import ElementSampler

# Small algebras where exhaustive identity checks stay fast
SMALL_PARAMS = [YParams(d, n) for d in (1, 2, 3, 4) for n in (2, 3)]


@pytest.fixture
def rng():
    return np.random.default_rng(DEFAULT_SEED)


@pytest.fixture
def sampler(rng):
    return ElementSampler(seed=DEFAULT_SEED, rng=rng)


@pytest.fixture(params=SMALL_PARAMS, ids=str)
def small_params(request):
    return request.param
