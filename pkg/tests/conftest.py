import random

import pytest

from ramsey_pm.graphs import SimpleGraph


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> SimpleGraph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return SimpleGraph.from_edges(n, edges)


def graph_from_mask(n: int, mask: int) -> SimpleGraph:
    """Graph on n labelled vertices from a bitmask over the C(n,2) edges
    in lexicographic (u, v) order."""
    rows = [0] * n
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            if mask >> k & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k += 1
    return SimpleGraph(n, tuple(rows))


@pytest.fixture
def rng():
    return random.Random(0x5EED)
