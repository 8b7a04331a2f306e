import pytest


_results = []


@pytest.fixture(scope="session")
def criteria():
    return _results


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(_results, key=lambda r: r[0]):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
