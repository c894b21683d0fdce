import random

import pytest

from selfdual import Hypergraph, min_reduce

# the five-edge worked example used throughout: one connected, self-dual
# hypergraph on five vertices
FIG_EDGES = [[0, 3], [0, 4], [1, 3, 4], [0, 1, 2], [2, 3, 4]]


@pytest.fixture
def fig1() -> Hypergraph:
    return Hypergraph.from_edge_sets(5, FIG_EDGES)


def random_hypergraph(rng: random.Random, n: int, m: int) -> Hypergraph:
    """Arbitrary hypergraph: may be non-Sperner, disconnected, non-intersecting."""
    return Hypergraph(n, tuple(rng.randrange(0, 1 << n) for _ in range(m)))


def random_sperner(rng: random.Random, n: int, m: int) -> Hypergraph:
    edges = tuple(rng.randrange(1, 1 << n) for _ in range(m))
    return Hypergraph(n, min_reduce(edges))
