"""Shared pytest harness: collects per-criterion verdicts for the summary.

The end-to-end gate in test_acceptance.py records one verdict per
criterion; the terminal-summary hook prints them after the run so the
lines are visible without -s (pytest captures in-test prints otherwise).
"""

import pytest

ACCEPTANCE_RESULTS = {}


@pytest.fixture
def record_acceptance():
    def _record(number: int, passed: bool, detail: str = ""):
        ACCEPTANCE_RESULTS[number] = (bool(passed), detail)

    return _record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        passed, detail = ACCEPTANCE_RESULTS[number]
        line = "ACCEPTANCE %d: %s" % (number, "PASS" if passed else "FAIL")
        if detail:
            line += "  [%s]" % detail
        terminalreporter.write_line(line)
