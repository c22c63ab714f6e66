"""Brute-force reference enumerators.

Nothing here is shared with the fast enumerators: subsets are walked as
bitmasks and checked with a plain depth-first 2-colouring.
"""
from __future__ import annotations

from .graph import Graph

DEFAULT_LIMIT = 20


class OracleLimitExceeded(ValueError):
    pass


def _two_color(vertices, adj) -> tuple[bool, bool]:
    """Return (connected, bipartite) for the graph given by ``adj`` on ``vertices``."""
    vertices = list(vertices)
    color = {}
    components = 0
    bipartite = True
    for s in vertices:
        if s in color:
            continue
        components += 1
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in adj.get(v, ()):
                if w not in color:
                    color[w] = color[v] ^ 1
                    stack.append(w)
                elif color[w] == color[v]:
                    bipartite = False
    return components == 1, bipartite


def _restricted_adj(g: Graph, subset) -> dict[int, list[int]]:
    subset = set(subset)
    return {v: [w for w in g.neighbors(v) if w in subset] for v in subset}


def is_bipartite(g: Graph, subset=None) -> bool:
    """True iff the subgraph induced by ``subset`` (default: all vertices) is 2-colourable."""
    subset = range(g.n) if subset is None else subset
    return _two_color(subset, _restricted_adj(g, subset))[1]


def is_connected(g: Graph, subset=None) -> bool:
    subset = range(g.n) if subset is None else subset
    return _two_color(subset, _restricted_adj(g, subset))[0]


def brute_force_induced(g: Graph, limit: int = DEFAULT_LIMIT) -> set[tuple[int, ...]]:
    if g.n > limit:
        raise OracleLimitExceeded(f"n={g.n} exceeds oracle limit {limit}")
    nbr_mask = [0] * g.n
    for a, b in g.edges:
        nbr_mask[a] |= 1 << b
        nbr_mask[b] |= 1 << a
    out = set()
    for mask in range(1, 1 << g.n):
        vs = [v for v in range(g.n) if mask >> v & 1]
        adj = {v: [w for w in range(g.n) if nbr_mask[v] & mask & (1 << w)] for v in vs}
        connected, bipartite = _two_color(vs, adj)
        if connected and bipartite:
            out.add(tuple(vs))
    return out


def brute_force_edge(g: Graph, limit: int = DEFAULT_LIMIT) -> set[tuple[int, ...]]:
    if g.m > limit:
        raise OracleLimitExceeded(f"m={g.m} exceeds oracle limit {limit}")
    out = set()
    for mask in range(1, 1 << g.m):
        es = [i for i in range(g.m) if mask >> i & 1]
        adj: dict[int, list[int]] = {}
        for i in es:
            a, b = g.edges[i]
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        connected, bipartite = _two_color(adj, adj)
        if connected and bipartite:
            out.add(tuple(es))
    return out
