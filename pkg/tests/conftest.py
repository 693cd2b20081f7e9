from dataclasses import dataclass

import pytest

from quiverdt.quiver import Quiver
from quiverdt.selftest import QUIVER_SUITE


@dataclass
class GlobalData:
    complete: bool = None
    series_order: int = None
    suite_order: int = None
    max_entry: int = None
    k_max: int = None


global_data = GlobalData()


def pytest_addoption(parser):
    parser.addoption("--complete", action="store_true")


def pytest_configure(config):
    global_data.complete = config.getoption("complete")
    global_data.series_order = 8 if global_data.complete else 4
    global_data.suite_order = 5 if global_data.complete else 3
    global_data.max_entry = 3 if global_data.complete else 1
    global_data.k_max = 12 if global_data.complete else 5


@pytest.fixture(scope="session")
def suite():
    return QUIVER_SUITE


@pytest.fixture(scope="session")
def pair():
    return Quiver([[0, 1], [1, 0]])


@pytest.fixture(scope="session")
def two_loops():
    return Quiver([[2]])
