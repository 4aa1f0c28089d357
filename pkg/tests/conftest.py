from __future__ import annotations

import json
from pathlib import Path

import pytest
from hypothesis import settings

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def class_counts() -> dict[str, dict[int, int]]:
    """Class counts computed once by the permutation/Burnside oracles and frozen."""
    data = json.loads((FIXTURES / "class_counts.json").read_text())
    return {kind: {int(n): c for n, c in table.items()} for kind, table in data.items()}


settings.register_profile("default", deadline=None, derandomize=True, max_examples=100)
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
