import itertools
from fractions import Fraction

import pytest

from partreg.search import Coloring


def naive_mono_solution(col: Coloring, coeffs, distinct):
    """Lexicographic scan of [1..n]^len(coeffs); the reference for find_mono_solution."""
    for tup in itertools.product(range(1, col.n + 1), repeat=len(coeffs)):
        if sum(b * e for b, e in zip(coeffs, tup)) != 0:
            continue
        if distinct and len(set(tup)) != len(tup):
            continue
        if len({col(e) for e in tup}) == 1:
            return tup
    return None


def all_colorings(n, c):
    for colors in itertools.product(range(c), repeat=n):
        yield Coloring(n, colors, c)


def brute_forcing(has_pattern, c, n_max):
    """Smallest N with every c-coloring of [1..N] containing the pattern."""
    for n in range(1, n_max + 1):
        if all(has_pattern(col) for col in all_colorings(n, c)):
            return n
    return None


@pytest.fixture
def parity():
    return lambda n: Coloring.from_function(n, lambda x: x % 2, 2)


@pytest.fixture
def mono():
    return lambda n: Coloring(n, (0,) * n, 1)


F = Fraction


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
