import pytest

_KEY = pytest.StashKey[dict]()


@pytest.fixture
def verdict(request):
    """Record one PASS/FAIL line per acceptance criterion for the terminal summary."""
    store = request.config.stash.setdefault(_KEY, {})

    def record(number: int, title: str, ok: bool, detail: str = ""):
        store[number] = f"{'PASS' if ok else 'FAIL'}  [{number:>2}] {title}" + (f": {detail}" if detail else "")
        print(store[number])
        assert ok, detail

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    store = config.stash.get(_KEY, {})
    if store:
        terminalreporter.section("acceptance criteria")
        for k in sorted(store):
            terminalreporter.write_line(store[k])
