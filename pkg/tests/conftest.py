import itertools

import numpy as np
import pytest

from fillorder.graph import StaticGraph, from_edges


def gnp(n: int, p: float, rng) -> StaticGraph:
    return from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                          if rng.random() < p])


def all_graphs(n: int):
    """Every labeled simple graph on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def random_elimination_state(rng, n_max=20, p=0.3, n_min=2):
    """(graph, eliminated list, remaining vertex) for estimator trials."""
    n = int(rng.integers(n_min, n_max + 1))
    g = gnp(n, p, rng)
    steps = int(rng.integers(0, n - 1))
    order = [int(x) for x in rng.permutation(n)]
    eliminated = order[:steps]
    u = order[steps]
    return g, eliminated, u


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)
