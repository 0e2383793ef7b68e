import pytest

from sumcollapse import PrimeTable, compute_strata


@pytest.fixture(scope="session")
def table_1e6():
    return PrimeTable(1_000_000)


@pytest.fixture(scope="session")
def table_1e5():
    return PrimeTable(100_000)


@pytest.fixture(scope="session")
def table_small():
    return PrimeTable(2_000)


@pytest.fixture(scope="session")
def strata_1e5(table_1e5):
    return compute_strata(100_000, table_1e5)
