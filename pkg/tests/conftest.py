import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))


def pytest_addoption(parser):
    parser.addoption("--extended", action="store_true", help="run the long reproduction tier")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--extended") or os.environ.get("DSEQ_EXTENDED") == "1":
        return
    skip = pytest.mark.skip(reason="extended tier: pass --extended or set DSEQ_EXTENDED=1")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


_CRITERIA: dict[str, list[str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    label = marker.args[0]
    if rep.when == "call" or (rep.when == "setup" and rep.skipped):
        status = "PASS" if rep.passed else "SKIP" if rep.skipped else "FAIL"
        _CRITERIA.setdefault(label, []).append(status)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label, statuses in _CRITERIA.items():
        status = "FAIL" if "FAIL" in statuses else "SKIP" if "SKIP" in statuses else "PASS"
        terminalreporter.write_line(f"{status}  {label}")
