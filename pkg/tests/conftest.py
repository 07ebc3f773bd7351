import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from freeknot.appendix import load_shape_corpus  # noqa: E402
from freeknot.classify import default_table  # noqa: E402
from freeknot.diagram import iter_pd_file  # noqa: E402
from freeknot.classify import load_pd_data  # noqa: E402


@pytest.fixture(scope="session")
def table():
    return default_table()


@pytest.fixture(scope="session")
def corpus():
    return load_shape_corpus()


@pytest.fixture(scope="session")
def pds():
    return {pd.name: pd for pd in iter_pd_file(load_pd_data())}


@pytest.fixture(scope="session")
def trefoil(corpus):
    return corpus["3_1"]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(set(mod.LINES), key=lambda s: int(s.split()[1])):
        terminalreporter.write_line(line)
