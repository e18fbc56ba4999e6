import pytest

from semigap.sieve import scan


@pytest.fixture(scope="session")
def report():
    return scan(bound=20000)


@pytest.fixture(scope="session")
def wide_report():
    return scan(bound=100_000)
