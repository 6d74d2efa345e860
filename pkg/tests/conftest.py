import pytest

_lines = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_lines] = []


@pytest.fixture
def acceptance(request):
    """Record one PASS/FAIL line for an acceptance criterion."""
    def record(number: int, title: str, ok: bool, detail: str = ""):
        line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}" + (f"  [{detail}]" if detail else "")
        request.config.stash[_lines].append((number, line))
        print(line)
    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_lines, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
