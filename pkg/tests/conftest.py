import numpy as np
import pytest

from qrep import GaussianSpec, gaussian, hermite, make_grid


@pytest.fixture(scope="session")
def g1024():
    return make_grid(1024, 40.0)


@pytest.fixture(scope="session")
def unit_gaussian(g1024):
    return gaussian(g1024, GaussianSpec())


@pytest.fixture(scope="session")
def factory_states(g1024):
    """The six states the verification suites run on."""
    return [
        ("gaussian", gaussian(g1024, GaussianSpec())),
        ("gaussian_chirped", gaussian(g1024, GaussianSpec(s=1.0, c=2.0))),
        ("gaussian_moved", gaussian(g1024, GaussianSpec(s=1.5, x0=1.0, p0=-0.5))),
        ("hermite_1", hermite(g1024, 1)),
        ("hermite_2", hermite(g1024, 2)),
        ("hermite_3", hermite(g1024, 3)),
    ]


def max_abs(a, b=None):
    arr = a if b is None else np.asarray(a) - np.asarray(b)
    return float(np.abs(arr).max())
