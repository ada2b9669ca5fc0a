"""Shared pytest wiring.

test_acceptance.py records one PASS/FAIL line per gate check in
``gate_lines``; the hook below prints them as a summary block at the end
of the run so the verdicts are visible even with output capture on.
"""

gate_lines: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if gate_lines:
        terminalreporter.section("physics gate")
        for line in gate_lines:
            terminalreporter.line(line)
