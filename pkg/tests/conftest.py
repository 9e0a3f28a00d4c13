import functools

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from radsq import catalog
from radsq.harness.oracle import enumerate_indecomposables
from radsq.quivalg import gamma

settings.register_profile(
    "default", deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
settings.load_profile("default")


@functools.lru_cache(maxsize=None)
def universe(name: str, bound: int = 4, on_gamma: bool = False):
    a = algebra(name)
    return enumerate_indecomposables(gamma(a) if on_gamma else a, bound, seed=0)


@functools.lru_cache(maxsize=None)
def algebra(name: str):
    if name.startswith("random"):
        return catalog.random3(int(name[6:]))
    return {"ex1": catalog.example1, "ex2": catalog.example2, "kronecker": catalog.kronecker}[name]()


@pytest.fixture
def ex1():
    return algebra("ex1")


@pytest.fixture
def ex2():
    return algebra("ex2")


@pytest.fixture
def kron():
    return algebra("kronecker")


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_invertible(n: int, p: int, rng) -> np.ndarray:
    from radsq import exactla as la

    while True:
        g = rng.integers(0, p, size=(n, n))
        if la.is_invertible(g, p):
            return g


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.lines():
        terminalreporter.write_line(line)
