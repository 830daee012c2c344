import pytest

_RESULTS = {}


@pytest.fixture
def criterion():
    """Record a pass/fail line for an acceptance criterion."""

    def record(name, ok, detail=""):
        _RESULTS[name] = (bool(ok), detail)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_RESULTS, key=lambda s: (len(s.split()[0]), s)):
        ok, detail = _RESULTS[name]
        line = f"{'PASS' if ok else 'FAIL'}  criterion {name}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
