import itertools

import pytest

from bipenum import Graph


def brute_degeneracy(g: Graph) -> int:
    """Max over all non-empty vertex subsets of the minimum induced degree."""
    best = 0
    for r in range(1, g.n + 1):
        for subset in itertools.combinations(range(g.n), r):
            s = set(subset)
            best = max(best, min(sum(1 for w in g.neighbors(v) if w in s) for v in s))
    return best


@pytest.fixture
def k3():
    return Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
