import pytest

_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_report():
    """Record one PASS/FAIL line for an acceptance criterion and assert it."""

    def report(label, failures):
        status = "PASS" if not failures else "FAIL"
        detail = "" if not failures else " -- " + "; ".join(failures)
        line = f"{status} {label}{detail}"
        _ACCEPTANCE_LINES.append(line)
        print(line)
        assert not failures, line

    return report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
