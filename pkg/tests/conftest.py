import time
from dataclasses import dataclass

import pytest

from irlab import kernels
from irlab.verifier import PerfectionCache, collect

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=sorted(kernels.available_backends()))
def backend(request):
    """Each kernel module in turn (pure Python, and the compiled one if built)."""
    return kernels.available_backends()[request.param]


@dataclass
class TimedSweep:
    records: list
    cache: PerfectionCache
    seconds: float


@pytest.fixture(scope="session")
def sweep8():
    """Sweep records for every class with n <= 8, computed once per session."""
    cache = PerfectionCache()
    t0 = time.perf_counter()
    records = collect(8, cache=cache)
    return TimedSweep(records, cache, time.perf_counter() - t0)


@pytest.fixture(scope="session")
def records8(sweep8):
    return sweep8.records


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
