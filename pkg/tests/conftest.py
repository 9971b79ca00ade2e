import numpy as np
import pytest

from graphspline import DiscretizationConfig, run_table2, run_table4


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def table2_rows():
    return {r.index: r for r in run_table2(DiscretizationConfig())}


@pytest.fixture(scope="session")
def table4_rows():
    return {r.index: r for r in run_table4(DiscretizationConfig())}


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
