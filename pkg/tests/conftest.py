"""Shared test plumbing.

The acceptance tests record one line per criterion; the terminal-summary
hook prints them after the run so the verdicts stay visible even when
pytest captures stdout.
"""

from __future__ import annotations

_ACCEPTANCE_LINES: list[str] = []


def record_acceptance(line: str) -> None:
    _ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
