"""Shared pytest wiring.

The acceptance module records one verdict line per criterion; they are
echoed after the run so the pass/fail ledger survives output capture.
"""

CRITERION_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not CRITERION_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in CRITERION_LINES:
        terminalreporter.write_line(line)
