import pytest

# (criterion id, passed, detail) recorded by test_acceptance.py
ACCEPTANCE = []


@pytest.fixture
def acceptance():
    def record(criterion, passed, detail=""):
        ACCEPTANCE.append((criterion, bool(passed), detail))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, passed, detail in sorted(ACCEPTANCE, key=lambda r: r[0]):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {criterion}: {status}  {detail}")
