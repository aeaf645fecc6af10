"""Shared data: the n=7, p=16 running example used throughout the tests."""

import pytest

from ratcat.partition import Partition

N, P = 7, 16
OMEGA = "[-2,15,-1,16,-14,10,4]"
OMEGA_INV = (-12, -10, -1, 7, 8, 10, 26)
CORE = Partition((19, 13, 7, 6, 5, 5, 4, 3, 2, 2, 2, 2, 1))
PATH = "NEENENENEENNEEEEENEEEEE"

INVERSION_ROWS = ((0, 1, 2, 2, 3, 5), (1, 2, 2, 2, 5), (1, 1, 1, 3), (0, 0, 2), (0, 2), (2,))
SHI_ROWS = ((0, 1, 2, 2, 3, 2), (1, 2, 2, 2, 3), (1, 1, 1, 2), (0, 0, 2), (0, 2), (2,))
# entries where the minimum is taken against m + 1 = 3 rather than m = 2
SHI_MPLUS1 = {(1, 2), (1, 6), (2, 3), (2, 7), (3, 4), (3, 5), (4, 5), (5, 6), (6, 7)}

NORTH_LABELS = (0, 2, 11, 19, 20, 22, 38)
H_SET = frozenset({1, 3, 4, 5, 6, 8, 10, 12, 13, 15, 17, 24, 31})


@pytest.fixture
def omega():
    from ratcat.affine import parse_window
    return parse_window(OMEGA)


@pytest.fixture
def path():
    from ratcat.dyck import RationalDyckPath
    return RationalDyckPath(N, P, PATH)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod and mod.VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.VERDICTS:
            terminalreporter.write_line(line)
