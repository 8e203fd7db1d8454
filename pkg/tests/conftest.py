import numpy as np
import pytest

from weingarten import make_modulus


@pytest.fixture(scope="session")
def m05():
    return make_modulus(0.5)


@pytest.fixture(scope="session")
def m06():
    return make_modulus(0.6)


@pytest.fixture()
def rng():
    return np.random.default_rng(20240817)
