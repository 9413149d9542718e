"""
Pytest configuration file.
"""

from argparse import Namespace
from pathlib import Path

import pytest

from src.functions.piecewise import StepFunction, load_piecewise, step_to_piecewise
from src.models.config import Config

RESOURCES = Path(__file__).resolve().parent.parent / "src" / "resources" / "functions"

# g = 4 chi_[0,2pi) + 3 chi_[2pi,4pi) + 2 chi_[6pi,8pi) as (a_j, n_j) pairs
G1_STEPS = ((4, 0), (3, 1), (2, 3))


@pytest.fixture(scope="session")
def resources() -> Path:
    return RESOURCES


@pytest.fixture(scope="session")
def example6():
    return load_piecewise(RESOURCES / "example6.pw")


@pytest.fixture(scope="session")
def sine():
    return load_piecewise(RESOURCES / "sin.pw")


@pytest.fixture(scope="session")
def one():
    return load_piecewise(RESOURCES / "one.pw")


@pytest.fixture(scope="session")
def periodic_abs_sin():
    return load_piecewise(RESOURCES / "periodic_abs_sin.pw")


@pytest.fixture(scope="session")
def chi_0_2pi():
    return step_to_piecewise(StepFunction(steps=((1, 0),)))


@pytest.fixture(scope="session")
def chi_0_4pi():
    return step_to_piecewise(StepFunction(steps=((1, 0), (1, 1))))


@pytest.fixture(scope="session")
def g1():
    return StepFunction(steps=G1_STEPS)


@pytest.fixture(scope="session")
def g1_window(g1):
    return step_to_piecewise(g1)


@pytest.fixture(scope="function")
def config() -> Config:
    """Small grids and a light oracle so entrypoint tests stay fast."""
    return Config(xi_samples=64, grid_n=64, oracle_m_max=64, oracle_tests=4)


@pytest.fixture(scope="function")
def make_args():
    def factory(**kwargs) -> Namespace:
        return Namespace(**kwargs)

    return factory
