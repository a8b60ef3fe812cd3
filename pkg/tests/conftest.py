"""Prints a one-line verdict per acceptance criterion at the end of any
run that touched tests/test_acceptance.py."""

import re

_results: dict[int, tuple[str, str]] = {}

_PATTERN = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")


def pytest_runtest_logreport(report):
    m = _PATTERN.search(report.nodeid)
    if not m:
        return
    num, label = int(m.group(1)), m.group(2).replace("_", " ")
    if report.when == "setup" and report.skipped:
        _results[num] = (label, "SKIP")
        return
    if report.when != "call":
        return
    outcome = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
    _results[num] = (label, outcome)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(_results):
        label, outcome = _results[num]
        terminalreporter.write_line(f"criterion {num} ({label}): {outcome}")
