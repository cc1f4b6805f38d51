import pytest

from dirac_abc import SystemParams

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record_criterion():
    """Collect one pass/fail line per acceptance criterion for the terminal summary."""

    def record(label: str, passed: bool, detail: str = "") -> bool:
        _ACCEPTANCE_LINES.append(f"{'PASS' if passed else 'FAIL'}  {label}  {detail}".rstrip())
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def running_params():
    """m0 = |e| = 1, Z = 0.1, no flux, no field."""
    return SystemParams(m0=1.0, e_abs=1.0, Z=0.1)
