import pytest

from tauprimes.cache import write_cache
from tauprimes.series import delta_series


@pytest.fixture(scope="session")
def table100k():
    # ~20 s once per session; everything below 10^5 truncates from this.
    return delta_series(100_000)


@pytest.fixture(scope="session")
def table10k(table100k):
    return table100k.truncated(10_000)


@pytest.fixture(scope="session")
def table2k(table100k):
    return table100k.truncated(2_000)


@pytest.fixture(scope="session")
def cache_file_100k(table100k, tmp_path_factory):
    path = tmp_path_factory.mktemp("cache") / "taucache.txt"
    write_cache(table100k, path)
    return path
