import pytest

_criterion_lines: list[str] = []


@pytest.fixture
def report_criterion():
    def report(number: int, ok: bool, detail: str) -> str:
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
        print(line)
        _criterion_lines.append(line)
        return line

    return report


def pytest_terminal_summary(terminalreporter):
    if _criterion_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_criterion_lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
