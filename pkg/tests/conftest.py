import numpy as np
import pytest

from diosieve.primes import build_table


@pytest.fixture(scope="session")
def table_small():
    """[2, 2e4+2] with spf; covers windows for N up to 1e4."""
    return build_table(2 * 10**4 + 2, with_spf=True)


@pytest.fixture(scope="session")
def table_1e5():
    return build_table(10**5 + 2, with_spf=True)


@pytest.fixture(scope="session")
def table_1e7():
    """The big acceptance table; built once per session."""
    return build_table(10**7 + 2, with_spf=True)


@pytest.fixture(scope="session")
def table_expsum():
    """Primality-only table covering dyadic windows up to [2^20, 2^21]."""
    return build_table(2 * 2**20 + 2, with_spf=False)


@pytest.fixture()
def rng():
    return np.random.default_rng(20160923)
