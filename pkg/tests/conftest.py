import pytest
from hypothesis import settings, strategies as st

from mop2center import random_mop, validate_mop

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, name: str, ok: bool, detail: str) -> None:
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number} ({name}): {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def mops(min_n: int = 3, max_n: int = 40):
    return st.builds(random_mop, st.integers(min_n, max_n), st.integers(0, 2**64 - 1))


@pytest.fixture
def triangle():
    return validate_mop(3, [])


@pytest.fixture
def hexagon():
    return validate_mop(6, [(0, 2), (2, 4), (4, 0)])


@pytest.fixture
def fan6():
    return validate_mop(6, [(0, 2), (0, 3), (0, 4)])
