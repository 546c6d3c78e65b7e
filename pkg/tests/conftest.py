import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from autonet import Network
from autonet.verification import fixture_path

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def swap():
    return Network.from_table(2, 2, ["00", "10", "01", "11"])


@pytest.fixture
def negation():
    return Network.negation(2)


@pytest.fixture
def x3_negate():
    return Network.from_table(2, 3, ["110", "001", "100", "011", "110", "110", "100", "100"])


@pytest.fixture
def data_file():
    return lambda name: str(fixture_path(name))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
