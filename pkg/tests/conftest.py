import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record one pass/fail line for an acceptance criterion."""

    def record(label, ok, detail=""):
        line = f"{label}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
