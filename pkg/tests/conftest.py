import pytest

from partops import backends


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "slow: long-running checks (large k sweeps)")


@pytest.fixture(params=backends.available_backends())
def backend(request):
    """Run a test once per available kernel backend."""
    return request.param
