import numpy as np
import pytest

from diamond_cluster.model import ClusterParams


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_params(rng, scale=10.0) -> ClusterParams:
    return ClusterParams(*rng.uniform(-scale, scale, size=5))


def random_state(rng, dim=16) -> np.ndarray:
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)
