from pathlib import Path

import pytest

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "webcalc" / "fixtures"
VERDICTS: dict = {}


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    if not VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(VERDICTS):
        terminalreporter.write_line(VERDICTS[k])
