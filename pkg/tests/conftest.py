import random
from functools import lru_cache

import pytest

from voronoi_chi.qform import catalog_entry
from voronoi_chi.voronoi import voronoi_of


@lru_cache(maxsize=None)
def gens_of(symbol):
    return voronoi_of(catalog_entry(symbol))


def random_unimodular(rng: random.Random, n: int, steps: int = 12):
    """Random element of GL_n(Z) as a product of elementary moves."""
    a = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        move = rng.choice(["add", "swap", "neg"])
        if move == "add":
            f = rng.choice([-1, 1])
            for r in range(n):
                a[r][i] += f * a[r][j]
        elif move == "swap":
            for r in range(n):
                a[r][i], a[r][j] = a[r][j], a[r][i]
        else:
            for r in range(n):
                a[r][i] = -a[r][i]
    return a


@pytest.fixture
def rng():
    return random.Random(20241108)


ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
