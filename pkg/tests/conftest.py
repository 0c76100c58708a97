import time
from contextlib import contextmanager

import pytest


@pytest.fixture
def criterion(request):
    """Context manager timing one acceptance criterion and recording a
    PASS/FAIL line that is echoed in the terminal summary."""
    results = request.config.stash.setdefault(_RESULTS, [])

    @contextmanager
    def run(number: int, title: str, limit: float):
        start = time.perf_counter()
        status = "FAIL"
        try:
            yield
            elapsed = time.perf_counter() - start
            assert elapsed < limit, f"took {elapsed:.2f}s, limit is {limit}s"
            status = "PASS"
        finally:
            elapsed = time.perf_counter() - start
            line = f"criterion {number:2d}: {status}  {title}  [{elapsed:.2f}s, limit {limit:g}s]"
            results.append((number, line))
            print(line)

    return run


_RESULTS = pytest.StashKey[list]()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_RESULTS, [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(results):
        terminalreporter.write_line(line)
