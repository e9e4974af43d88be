import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from qcf.group_law import MultipleTable
from qcf.presets import SEC3, SEC4, SEC52

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def rationals(max_num=60, max_den=12, nonzero=False):
    nums = st.integers(-max_num, max_num)
    if nonzero:
        nums = nums.filter(bool)
    return st.builds(Fraction, nums, st.integers(1, max_den))


@pytest.fixture(scope="session")
def sec3_data():
    return SEC3.birational()


@pytest.fixture(scope="session")
def sec4_data():
    return SEC4.birational()


@pytest.fixture(scope="session")
def sec52_data():
    return SEC52.birational()


@pytest.fixture(scope="session")
def sec3_tables(sec3_data):
    """Multiples n*P1, n*P2 for |n| <= 6 on the ib-sec3 curve."""
    return [MultipleTable(sec3_data.dst, P, 6) for P in SEC3.generators]


def random_combos(rng: random.Random, count: int, bound: int, k: int = 2):
    return [tuple(rng.randint(-bound, bound) for _ in range(k)) for _ in range(count)]
