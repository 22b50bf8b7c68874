import random
from functools import lru_cache

import pytest

from drgkit.catalog import build
from drgkit.graph import Graph


@lru_cache(maxsize=None)
def graph(name, *params):
    return build(name, *params)[0]


@pytest.fixture
def petersen():
    return graph("petersen")


def random_graphs(count, max_v, seed, min_v=1):
    """Seeded Erdos-Renyi graphs with a random density per graph."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(min_v, max_v)
        p = rng.random()
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        out.append(Graph.from_edges(n, edges))
    return out


def to_nx(g):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.v))
    h.add_edges_from(g.edges())
    return h


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
