import time

import pytest

from psp62 import gf
from psp62.constants import load
from psp62.nielsen import NielsenContext, count_tuples
from psp62.perm import CycleType
from psp62.sp62 import SymplecticModel, locate_class_vector

ACCEPTANCE_LINES: list[str] = []


class TwoCubics:
    """(X^3 - t - 2)(X^3 - 2 t^2 - 5) over F_p: an intransitive planted
    family with two orbits, so the mean number of fixed points is 2."""

    def good_prime(self, p):
        return p > 12 and gf.is_prime(p)

    def __call__(self, p, t0):
        a = gf.GFPoly([-t0 - 2, 0, 0, 1], p)
        b = gf.GFPoly([-2 * t0 * t0 - 5, 0, 0, 1], p)
        return a * b


@pytest.fixture(scope="session")
def consts():
    return load()


@pytest.fixture(scope="session")
def model():
    m = SymplecticModel(seed=0)
    start = time.perf_counter()
    m.census
    m.census_seconds = time.perf_counter() - start
    return m


@pytest.fixture(scope="session")
def census(model):
    return model.census


@pytest.fixture(scope="session")
def class_vector(census, consts):
    return locate_class_vector(census, [CycleType.parse(s) for s in consts.claimed["class_types"]])


@pytest.fixture(scope="session")
def nielsen(census, class_vector):
    c1, c2, c3 = class_vector
    ctx = NielsenContext(census, c1)
    start = time.perf_counter()
    res = count_tuples(ctx, [c1, c2, c2, c3])
    res.seconds = time.perf_counter() - start
    return ctx, res


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
