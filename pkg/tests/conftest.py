import random

import pytest


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def random_digraph(rng, n, p):
    from pultr.graphs import Digraph

    return Digraph(
        n, [(u, v) for u in range(n) for v in range(n) if rng.random() < p]
    )


def random_graph(rng, n, p, loops=False):
    from pultr.graphs import Graph

    edges = []
    for u in range(n):
        for v in range(u if loops else u + 1, n):
            if rng.random() < p:
                edges.append((u, v))
    return Graph(n, edges)
