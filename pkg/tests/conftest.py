import functools
import os

import pytest
from hypothesis import HealthCheck, settings

from nilhecke import load_system

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile(
    "thorough", max_examples=400, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@functools.lru_cache(maxsize=None)
def system(name):
    """One shared instance per built-in name (elements compare by system identity)."""
    return load_system(name)


@pytest.fixture
def A2():
    return system("A2")


@pytest.fixture
def B2():
    return system("B2")


@pytest.fixture
def A3():
    return system("A3")


@pytest.fixture
def D4():
    return system("D4")


# acceptance criterion lines collected by tests/test_acceptance.py
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
