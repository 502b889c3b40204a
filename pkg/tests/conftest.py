"""Test configuration and fixtures."""

import os

import pytest

from core.dependencies import clear_settings, init_settings
from core.logging import configure_logging
from games.models import VectorGame, WeightedSpec
from games.simple_game import from_player_sets, from_weighted


@pytest.fixture(autouse=True)
def setup_test_environment():
    """Setup test environment variables before each test."""
    # Store original env vars
    original_env = dict(os.environ)

    os.environ.update(
        {
            "ENVIRONMENT": "test",
            "LOG_LEVEL": "WARNING",
            "ORACLE_MAX_N": "5",
            "ALLOW_N6": "false",
            "ORACLE_WORKERS": "1",
        }
    )

    yield

    # Restore original env vars
    os.environ.clear()
    os.environ.update(original_env)
    clear_settings()
    configure_logging()


@pytest.fixture
def settings():
    return init_settings()


@pytest.fixture
def example_game():
    """n=3 game whose minimal winning coalitions are {1} and {2,3}."""
    return from_player_sets(3, [[1], [2, 3]])


@pytest.fixture
def weighted_example_game():
    """The same game given as weights (3,2,1) with quota 3."""
    return from_weighted(WeightedSpec(weights=(3, 2, 1), quota=3))


@pytest.fixture
def example_pair():
    """The two-class pair n̄=(4,2), M=[[3,0],[2,1]]."""
    return VectorGame(n_bar=(4, 2), matrix=((3, 0), (2, 1)))


@pytest.fixture
def swapped_example_pair():
    """The same game with the two classes listed the other way round."""
    return VectorGame(n_bar=(2, 4), matrix=((1, 2), (0, 3)))


# Pytest markers for different test types
def pytest_configure(config):
    """Configure pytest markers."""
    config.addinivalue_line("markers", "slow: marks tests as slow running")
