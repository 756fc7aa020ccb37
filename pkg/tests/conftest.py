import pytest

ACCEPTANCE_RESULTS = []


def record_criterion(number, passed, detail):
    ACCEPTANCE_RESULTS.append((number, passed, detail))


@pytest.fixture
def acceptance():
    """Recorder for the acceptance suite; one line per criterion at the end."""
    return record_criterion


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed, detail in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(
            f"ACCEPTANCE criterion {number:02d} {status} {detail}")
