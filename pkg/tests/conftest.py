import sys

import pytest

from codent import catalog
from codent.closure import close_group


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", help="also run tests marked slow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="slow; use --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def g_gens():
    return catalog.g_generators()


@pytest.fixture(scope="session")
def h_gens():
    return catalog.h_generators()


@pytest.fixture(scope="session")
def H(h_gens):
    return close_group(list(h_gens.values()))


@pytest.fixture(scope="session")
def deg8():
    return catalog.degree8_enumerators()


@pytest.fixture(scope="session")
def deg16():
    return catalog.degree16_enumerators()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
