import sys

import pytest

from knotsurgery.laurent import LaurentPoly

DELTA_105 = LaurentPoly.from_coefficients([1, -5, 13, -21, 25, -21, 13, -5, 1], low=-4)
FACTORS_105_64 = ((13, 2), (61, 2), (127, 2), (463, 2), (631, 4), (1358281, 4))
FACTORS_105_76 = ((139, 4), (211, 4), (491, 2), (8761, 2), (10005451, 4))


def product(factors):
    out = 1
    for p, e in factors:
        out *= p**e
    return out


@pytest.fixture
def delta_105():
    return DELTA_105


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(acceptance.RESULTS):
        terminalreporter.write_line(acceptance.RESULTS[number])
