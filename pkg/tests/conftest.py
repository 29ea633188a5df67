"""Prints one PASS/FAIL line per acceptance criterion at the end of the run."""

from __future__ import annotations

import re

import pytest

_RESULTS: dict[str, tuple[str, float, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    label = marker.args[0]
    detail = "; ".join(str(v) for k, v in item.user_properties if k == "detail")
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _RESULTS[label] = (rep.outcome.upper(), rep.duration, detail)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_RESULTS, key=lambda s: (int(re.match(r"\d+", s).group()), s)):
        status, secs, detail = _RESULTS[label]
        word = {"PASSED": "PASS", "FAILED": "FAIL"}.get(status, status)
        line = f"{word:5} {label} ({secs:.1f} s)"
        terminalreporter.write_line(line + (f": {detail}" if detail else ""))
