import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def rng():
    return random.Random(20181)


def random_01(rng, n):
    return [[rng.randint(0, 1) for _ in range(n)] for _ in range(n)]


def random_pm1(rng, n):
    return [[rng.choice((-1, 1)) for _ in range(n)] for _ in range(n)]


CORNER = {n: [[int(i == j) for j in range(n)] for i in range(n)] for n in range(1, 11)}
EXAMPLE_M = [[1, 1, 1], [0, 1, 1], [1, 1, 0]]
EXAMPLE_H3 = [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
HADAMARD4 = [[1, -1, 1, -1], [1, 1, 1, 1], [1, -1, -1, 1], [1, 1, -1, -1]]


# one pass/fail line per acceptance criterion
_criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    key = marker.args[0]
    if rep.when == "setup" and (rep.skipped or rep.failed):
        status = "SKIP" if rep.skipped else "FAIL"
    elif rep.when == "call":
        status = "PASS" if rep.passed else ("SKIP" if rep.skipped else "FAIL")
    else:
        return
    # parametrized criteria: any FAIL wins, then PASS, then SKIP
    rank = {"FAIL": 2, "PASS": 1, "SKIP": 0}
    name = item.originalname or item.name
    if key not in _criteria or rank[status] > rank[_criteria[key][0]]:
        _criteria[key] = (status, name)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_criteria):
        status, name = _criteria[key]
        terminalreporter.write_line(f"criterion {key:>2}: {status}  ({name})")
