"""Collects the outcome of every test marked ``criterion`` and prints one
PASS/FAIL line per acceptance criterion at the end of the run."""

import pytest

_OUTCOMES = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion checked by this test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    label = marker.args[0]
    if rep.when == "call" or rep.failed:
        prev = _OUTCOMES.get(label, True)
        _OUTCOMES[label] = prev and rep.passed


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_OUTCOMES):
        terminalreporter.write_line(f"{'PASS' if _OUTCOMES[label] else 'FAIL'}  {label}")
