import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import ubergraph as ug  # noqa: E402

DATA = Path(__file__).parent / "data"

_acceptance: dict[int, tuple[str, str]] = {}


@pytest.fixture
def data_dir() -> Path:
    return DATA


@pytest.fixture
def hypergraph_example():
    """V = {1..5}, E = {{1},{1,3},{2,3},{1,3,5}}."""
    return ug.load(DATA / "hypergraph.ugt")


@pytest.fixture
def ubergraph_example():
    """V = {1,2,3}, e3 = {1,3,e1}, e4 = {2,e2}, e5 = {1,e4}."""
    return ug.load(DATA / "ubergraph.ugt")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        previous = _acceptance.get(number, (title, "passed"))[1]
        status = rep.outcome if previous == "passed" else previous
        _acceptance[number] = (title, status)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(_acceptance):
        title, status = _acceptance[number]
        verdict = "PASS" if status == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {verdict}  {title}")
