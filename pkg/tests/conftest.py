from __future__ import annotations

import pytest

from qreflection.words import enumerate_ball


@pytest.fixture(scope="session")
def balls():
    """B_R for R <= 8 and s <= 5, keyed by (R, s)."""
    return {(R, s): enumerate_ball(R, s) for R in range(0, 9) for s in range(1, 6)}


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion."""

    def record(number: int, title: str, ok: bool, detail: str = "") -> bool:
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
        if detail:
            line += f" ({detail})"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
