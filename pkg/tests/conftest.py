import functools

import pytest

from casedraw.arrangement import build_arrangement
from casedraw.fixtures import grid, random_segments, triangle

ACCEPTANCE_LINES = []


def record_acceptance(label, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {label}" + (f": {detail}" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@functools.lru_cache(maxsize=None)
def corpus(size, max_k, segments=(4, 8), extent=12, seed0=0):
    """Seeded random drawings with at most ``max_k`` crossings.

    Drawings alternate through ``segments`` counts; seeds that overshoot
    ``max_k`` are skipped, so the corpus is identical on every run.
    """
    out = []
    seed = seed0
    lo, hi = segments
    while len(out) < size:
        count = lo + seed % (hi - lo + 1)
        d = random_segments(count, seed=seed, extent=extent)
        seed += 1
        if build_arrangement(d).k <= max_k:
            out.append(d)
    return tuple(out)


@pytest.fixture
def grid3():
    return grid(3, 3)


@pytest.fixture
def tri():
    return triangle()
