import sys
import random
from fractions import Fraction

import pytest

from edgecover.graph import Graph, complete_graph, gen_gnp, path_graph, star_graph


def random_graph(rnd: random.Random, n: int, weights=(1, 1)) -> Graph:
    p = Fraction(rnd.randint(1, 9), 10)
    w = [rnd.randint(*weights) for _ in range(n)]
    return gen_gnp(n, p, rnd.randrange(2**31), weights=w)


def corpus(count: int, nmax: int, seed: int, weights=(1, 8), nmin: int = 1):
    rnd = random.Random(seed)
    return [random_graph(rnd, rnd.randint(nmin, nmax), weights) for _ in range(count)]


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def path3():
    return path_graph(3)


@pytest.fixture
def star4():
    return star_graph(4)


@pytest.fixture
def two_edges():
    return Graph.from_edges(4, [(0, 1), (2, 3)])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "REPORTED", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
