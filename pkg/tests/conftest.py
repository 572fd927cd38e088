import decimal
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])


@pytest.fixture
def acceptance():
    """Record the report line of one acceptance criterion."""

    def record(number: int, line: str) -> None:
        ACCEPTANCE_LINES[number] = line
        print(line)

    return record


@pytest.fixture(autouse=True)
def _wide_decimal_context():
    """Test-side arithmetic such as ``-x`` or ``r**n`` must not round at 28 digits."""
    with decimal.localcontext() as ctx:
        ctx.prec = 500
        yield
