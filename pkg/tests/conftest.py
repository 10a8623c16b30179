import sys
from fractions import Fraction as F
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from agfuzz import ag_group, fuzzy_subset  # noqa: E402
from agfuzz.tables import ORDER4_ROWS  # noqa: E402

K4_ROWS = [[i ^ j for j in range(4)] for i in range(4)]
Z3S_ROWS = [[(j - i) % 3 for j in range(3)] for i in range(3)]


@pytest.fixture
def g4():
    """The order-4 AG-group with row 1 = 3 0 1 2."""
    return ag_group(ORDER4_ROWS)


@pytest.fixture
def k4():
    return ag_group(K4_ROWS)


@pytest.fixture
def z3s():
    return ag_group(Z3S_ROWS)


@pytest.fixture
def mu4(g4):
    return fuzzy_subset(g4, [1, F(1, 2), F(1, 2), F(1, 2)], "mu4")


@pytest.fixture
def mu_k4(k4):
    # e -> 1, a -> 1/2, b, ab -> 1/4
    return fuzzy_subset(k4, [1, F(1, 2), F(1, 4), F(1, 4)], "mu_k4")


@pytest.fixture
def mu_k4_ea(k4):
    # level set {e, a}
    return fuzzy_subset(k4, [1, 1, F(1, 2), F(1, 2)], "mu_k4_ea")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS):
        ok, msg = RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {msg}")
