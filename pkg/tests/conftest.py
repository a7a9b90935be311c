import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from middledom.families import cycle, path, star  # noqa: E402
from middledom.graph import Graph  # noqa: E402

_ACCEPTANCE_KEY = pytest.StashKey[list]()


@pytest.fixture
def c4() -> Graph:
    return cycle(4)


@pytest.fixture
def p5() -> Graph:
    return path(5)


@pytest.fixture
def k13() -> Graph:
    return star(3)


@pytest.fixture
def spider_tree() -> Graph:
    return Graph(5, [(0, 1), (1, 2), (2, 3), (2, 4)])


@pytest.fixture
def acceptance_log(request):
    store = request.config.stash.setdefault(_ACCEPTANCE_KEY, [])

    def record(criterion: str, ok: bool, detail: str) -> None:
        store.append((criterion, ok, detail))

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, ok, detail in lines:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {criterion}: {detail}")
