import itertools

import pytest


def brute_weak_orders(n):
    """Every length-n word over 0..n-1 whose letter set is an initial run."""
    return [w for w in itertools.product(range(n), repeat=n) if set(w) == set(range(max(w) + 1))]


@pytest.fixture(scope="session")
def brute():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = brute_weak_orders(n)
        return cache[n]

    return get


_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome
    elif "test_acceptance.py" in report.nodeid and report.failed:
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        verdict = "PASS" if _acceptance[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
