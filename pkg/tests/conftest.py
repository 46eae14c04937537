import pytest

_criterion_lines: list[tuple[str, bool, str]] = []


def record_criterion(name: str, passed: bool, detail: str = "") -> None:
    """Collect one pass/fail line per acceptance criterion for the summary."""
    _criterion_lines.append((name, passed, detail))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _criterion_lines:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name, ok, detail in _criterion_lines:
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] {name}: {detail}")


@pytest.fixture
def check_criterion():
    def _check(name: str, passed: bool, detail: str = "") -> None:
        record_criterion(name, passed, detail)
        assert passed, f"{name}: {detail}"

    return _check
