import pytest

from polarcheck.numerics import ToleranceConfig


@pytest.fixture
def tol():
    return ToleranceConfig()
