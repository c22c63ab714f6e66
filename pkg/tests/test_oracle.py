import pytest

from bipenum import Graph
from bipenum.generators import complete, cycle, path, star
from bipenum.oracle import (
    OracleLimitExceeded,
    brute_force_edge,
    brute_force_induced,
    is_bipartite,
    is_connected,
)


def test_is_bipartite():
    assert is_bipartite(cycle(6))
    assert not is_bipartite(cycle(5))
    assert is_bipartite(star(4))
    assert is_bipartite(complete(4), [0, 1])
    assert not is_bipartite(complete(4), [0, 1, 2])


def test_is_connected():
    g = Graph.from_edges(3, [(0, 1)])
    assert is_connected(g, [2])
    assert not is_connected(g, [0, 2])
    assert not is_connected(g)
    assert is_connected(path(7))


@pytest.mark.parametrize("g, induced, edge", [
    (complete(3), 6, 6),
    (complete(4), 10, None),
    (path(3), 6, 3),
    (cycle(4), 13, 13),
])
def test_known_counts(g, induced, edge):
    assert len(brute_force_induced(g)) == induced
    if edge is not None:
        assert len(brute_force_edge(g)) == edge


def test_k3_sets():
    assert brute_force_induced(complete(3)) == {(0,), (1,), (2,), (0, 1), (0, 2), (1, 2)}
    assert brute_force_edge(complete(3)) == {(0,), (1,), (2,), (0, 1), (0, 2), (1, 2)}


def subtree_count(g: Graph, root=0) -> int:
    """Connected vertex subsets of a tree, by the usual product DP."""
    total = 0

    def dfs(v, parent):
        nonlocal total
        here = 1
        for w in g.neighbors(v):
            if w != parent:
                here *= 1 + dfs(w, v)
        total += here
        return here

    dfs(root, -1)
    return total


@pytest.mark.parametrize("n", range(1, 11))
def test_paths_match_closed_form(n):
    assert len(brute_force_induced(path(n))) == n * (n + 1) // 2 == subtree_count(path(n))


def test_tree_matches_subtree_dp():
    g = Graph.from_edges(8, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (5, 6), (5, 7)])
    assert len(brute_force_induced(g)) == subtree_count(g)


def test_every_output_passes_checkers():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    sols = brute_force_induced(g)
    for mask in range(1, 1 << g.n):
        vs = [v for v in range(g.n) if mask >> v & 1]
        assert (tuple(vs) in sols) == (is_connected(g, vs) and is_bipartite(g, vs))


def test_limits():
    with pytest.raises(OracleLimitExceeded):
        brute_force_induced(path(25))
    with pytest.raises(OracleLimitExceeded):
        brute_force_edge(complete(7))
