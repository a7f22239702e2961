import itertools
import random
from fractions import Fraction

import pytest

from chordal_erasure.chordality import is_chordal, random_connected_chordal_graph
from chordal_erasure.graph import Graph, complete_graph, is_connected, path_graph
from chordal_erasure.oracles import all_graphs


def square_minus_diagonal() -> Graph:
    """K4 on the square's corners 0..3 with the diagonal (0, 2) erased."""
    return complete_graph(4).remove_edge(0, 2)


def random_graph(n: int, p: float, seed) -> Graph:
    rng = random.Random(seed)
    return Graph(n, (e for e in itertools.combinations(range(n), 2) if rng.random() < p))


def random_chordal(count: int, n_max: int, seed: int = 0, n_min: int = 1):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        density = Fraction(rng.randint(0, 10), 10)
        yield random_connected_chordal_graph(n, density, rng.getrandbits(32))


def random_connected_nonchordal(count: int, n_max: int, seed: int = 0):
    rng = random.Random(seed)
    made = 0
    while made < count:
        n = rng.randint(4, n_max)
        g = random_graph(n, rng.uniform(0.3, 0.8), rng.getrandbits(32))
        if is_connected(g) and not is_chordal(g):
            made += 1
            yield g


_SMALL = {}


def small_graphs(n: int) -> list:
    if n not in _SMALL:
        _SMALL[n] = list(all_graphs(n))
    return _SMALL[n]


@pytest.fixture
def square():
    return square_minus_diagonal()


@pytest.fixture
def p3():
    return path_graph(3)


ACCEPTANCE_LINES: list = []


def record(criterion: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {criterion}" + (f": {detail}" if detail else ""))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
