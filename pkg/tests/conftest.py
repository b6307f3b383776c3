import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from rdv.core import KernelSpace, validate_kernel
from rdv.spaces import generate, random_graph

settings.register_profile(
    "default",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")


@pytest.fixture
def t2() -> KernelSpace:
    return validate_kernel([[0.0, 1.0], [1.0, 0.0]], name="t2")


@pytest.fixture
def k3() -> KernelSpace:
    return validate_kernel([[0, 1, 1], [1, 0, 1], [1, 1, 0]], name="k3")


@pytest.fixture
def g3() -> KernelSpace:
    # three evenly spaced points on [0, 1]
    return validate_kernel([[0.0, 0.5, 1.0], [0.5, 0.0, 0.5], [1.0, 0.5, 0.0]], name="g3")


@pytest.fixture(scope="session")
def instances100() -> list[KernelSpace]:
    """The hundred seeded 6-point graph metrics shared across suites."""
    return [generate(random_graph(m=6, edge_prob=0.5, seed=s)) for s in range(100)]


def random_metric(seed: int, m: int = 6) -> KernelSpace:
    return generate(random_graph(m=m, edge_prob=0.5, seed=seed))


def assert_close(a, b, tol=1e-9):
    assert abs(a - b) <= tol, f"{a!r} vs {b!r} (tol {tol})"


@pytest.fixture
def tmp_json(tmp_path):
    def _path(name="f.json"):
        return str(tmp_path / name)

    return _path


def uniform_weights(m: int) -> np.ndarray:
    return np.full(m, 1.0 / m)
