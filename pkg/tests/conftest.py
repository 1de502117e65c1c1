import mpmath
import pytest

mpmath.mp.dps = 40

_ACCEPTANCE = []


@pytest.fixture
def acceptance_line():
    """Record one acceptance verdict line; printed in the terminal summary."""

    def record(label, ok, detail):
        _ACCEPTANCE.append(f"{'PASS' if ok else 'FAIL'}  {label}: {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in _ACCEPTANCE:
        terminalreporter.write_line(line)
