import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def golden_dir():
    return GOLDEN


def pytest_report_header(config):
    import heckeo

    return f"heckeo backend: {heckeo.BACKEND} (python {sys.version.split()[0]})"


ACCEPTANCE_LINES: list = []


@pytest.fixture
def criterion():
    """Record one summary line per acceptance criterion."""

    def record(number, title, passed, seconds, limit=None):
        budget = f" (limit {limit:.0f}s)" if limit else ""
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'} {title} [{seconds:.2f}s{budget}]"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
