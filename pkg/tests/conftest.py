import random

import pytest

from goeritz.exactmat import IntMatrix


def random_matrix(rng: random.Random, rows: int, cols: int, lo: int = -9, hi: int = 9) -> IntMatrix:
    return IntMatrix([[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)])


def random_unimodular(rng: random.Random, n: int, moves: int = 12) -> IntMatrix:
    """Product of random elementary moves: swaps, sign flips and row additions."""
    a = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(moves):
        kind = rng.randrange(3)
        i, j = rng.randrange(n), rng.randrange(n)
        if kind == 0:
            a[i], a[j] = a[j], a[i]
        elif kind == 1:
            a[i] = [-x for x in a[i]]
        elif i != j:
            c = rng.randint(-3, 3)
            a[i] = [x + c * y for x, y in zip(a[i], a[j])]
    return IntMatrix(a)


@pytest.fixture
def rng():
    return random.Random(20261016)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
