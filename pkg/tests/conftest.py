"""Shared fixtures.  Expensive constructions are built once per session."""

import os
import sys

os.environ.setdefault("TITS3_TEST_MODE", "1")

import pytest

from tits3.altsuper import build_b12, build_b_gamma, build_divided_powers
from tits3.char3 import assign_bj_grading, build_char3_superalgebra
from tits3.composition import build_composition, bracket_algebra, restricted_norm
from tits3.scalars import GF3, GF5, GF7


@pytest.fixture(scope="session")
def cayley3():
    return build_composition("split-cayley", GF3)


@pytest.fixture(scope="session")
def cayley5():
    return build_composition("split-cayley", GF5)


@pytest.fixture(scope="session")
def cayley7():
    return build_composition("split-cayley", GF7)


@pytest.fixture(scope="session")
def s3(cayley3):
    return bracket_algebra(cayley3), restricted_norm(cayley3)


@pytest.fixture(scope="session")
def b12():
    return build_b12(GF3)


@pytest.fixture(scope="session")
def bj(s3, b12):
    s, n = s3
    return build_char3_superalgebra(s, n, b12, name="bj")


def _big_bj(s3, N):
    s, n = s3
    B = build_b_gamma(build_divided_powers(N, GF3))
    c = build_char3_superalgebra(s, n, B.algebra, name=f"Bj(1;{N}|7)")
    return B, c, assign_bj_grading(c)


@pytest.fixture(scope="session")
def bj1(s3):
    return _big_bj(s3, 1)


@pytest.fixture(scope="session")
def bj2(s3):
    return _big_bj(s3, 2)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
