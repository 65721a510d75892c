import pytest

CRITERIA: list[str] = []


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion."""
    def record(number: int, title: str, ok: bool, detail: str) -> None:
        line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
        CRITERIA.append(line)
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in sorted(CRITERIA, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
