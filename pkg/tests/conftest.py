import pytest

ACCEPTANCE_RESULTS = []


def record_acceptance(num, ok, detail=""):
    ACCEPTANCE_RESULTS.append((num, ok, detail))


@pytest.hookimpl(trylast=True)
def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, ok, detail in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {num:>2}: {status}  {detail}")
