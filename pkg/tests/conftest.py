import numpy as np
import pytest

from moyal.atlas import BumpFourier, Gaussian
from moyal.geometry import symplectic
from moyal.grids import make_grid
from moyal.grids.sampling import clear_cache


@pytest.fixture(autouse=True)
def _fresh_sample_cache():
    yield
    clear_cache()


@pytest.fixture
def rng():
    return np.random.default_rng(42)


@pytest.fixture
def standard_theta():
    return symplectic(1.0)


@pytest.fixture
def gauss1():
    return Gaussian(gamma=1.0, center=(0.0, 0.0))


@pytest.fixture
def gauss2():
    return Gaussian(gamma=2.0, center=(0.0, 0.0))


@pytest.fixture
def bump():
    return BumpFourier(radius=2.0)


@pytest.fixture
def grid64():
    return make_grid(2, 64, 8.0)
