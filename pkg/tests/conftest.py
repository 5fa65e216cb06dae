import os

import pytest

from graphlets.catalog import load_catalog


@pytest.fixture(scope="session")
def cache_dir(tmp_path_factory):
    # reuse a developer cache when one is configured, else a throwaway one
    env = os.environ.get("GRAPHLETS_CACHE_DIR")
    return env if env else str(tmp_path_factory.mktemp("catalog-cache"))


@pytest.fixture(scope="session")
def catalog(cache_dir):
    """Catalog up to size 6; smaller ones are truncations of it."""
    return load_catalog(6, cache_dir)


@pytest.fixture(scope="session")
def catalog7(cache_dir):
    return load_catalog(7, cache_dir)


@pytest.fixture(scope="session")
def catalog8(cache_dir):
    return load_catalog(8, cache_dir)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
