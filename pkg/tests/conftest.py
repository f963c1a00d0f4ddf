import pytest

from pshua.psprimes import PrimeSieve


@pytest.fixture(scope="session")
def sieve():
    """Shared sieve large enough for every non-acceptance test."""
    return PrimeSieve.build(200_000)


@pytest.fixture(scope="session")
def sieve_small():
    return PrimeSieve.build(10_000)
