import functools

import pytest

from fishburn.objects import enumerate_ascent_sequences, enumerate_fishburn_matrices
from fishburn.patterns import enumerate_avoiders


@functools.lru_cache(maxsize=None)
def avoiders(n):
    return tuple(enumerate_avoiders(n))


@functools.lru_cache(maxsize=None)
def sequences(n):
    return tuple(enumerate_ascent_sequences(n))


@functools.lru_cache(maxsize=None)
def matrices(n):
    return tuple(enumerate_fishburn_matrices(n))


@pytest.fixture(scope="session")
def families():
    return {"avoiders": avoiders, "sequences": sequences, "matrices": matrices}


def brute_contains(p):
    """Cubic scan straight from the definition."""
    n = len(p)
    return any(p[i] + 1 == p[j] < p[i + 1]
               for i in range(n - 1) for j in range(i + 2, n))


ACCEPTANCE_LINES = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
