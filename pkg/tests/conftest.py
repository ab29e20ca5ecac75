import os
import random
import time

import pytest

from ringline import grassmannian as gm
from ringline import linalg

SEED = int(os.environ.get("RINGLINE_SEED", "20240607"))
TRIALS = 100

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.fixture
def rng():
    return random.Random(SEED)


@pytest.fixture
def cold():
    """Drop module-level caches so timings include all setup work."""
    gm.grassmannian.cache_clear()
    linalg.field.cache_clear()
    yield


class Stopwatch:
    def __init__(self, bound):
        self.bound = bound
        self.elapsed = None

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0
        return False

    def check(self):
        assert self.elapsed < self.bound, f"took {self.elapsed:.2f} s, bound {self.bound} s"


@pytest.fixture
def stopwatch():
    return Stopwatch


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    entry = _criteria.setdefault(number, [title, True, 0.0])
    if report.when == "call":
        entry[2] += report.duration
    if report.failed:
        entry[1] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok, duration = _criteria[number]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {title} ({duration:.2f} s)")
