import pytest

from helpers import fixture_rep


@pytest.fixture
def jordan2():
    return fixture_rep("JORDAN2")


@pytest.fixture
def a3rel():
    return fixture_rep("A3REL")
