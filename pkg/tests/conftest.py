import pytest

from eisencount.arith import build_sieve


@pytest.fixture(scope="session")
def sieve():
    """Mid-size sieve, enough for counting tests up to height 10^4."""
    return build_sieve(10**4)


@pytest.fixture(scope="session")
def big_sieve():
    """Million-entry sieve for series truncations and prime-count checks."""
    return build_sieve(10**6)
