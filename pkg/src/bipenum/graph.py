"""Graph representation, parsing and degeneracy ordering."""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field


class GraphFormatError(ValueError):
    """Raised for malformed or forbidden graph input."""

    def __init__(self, message: str, lineno: int | None = None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    ``edges[i]`` is ``(u, v)`` with ``u < v``; ``adjacency[v]`` lists
    ``(neighbor, edge_id)`` pairs sorted by neighbor.  ``names`` maps each
    vertex back to the label it had in the input, ``edge_names`` maps each
    edge to its index in the input edge sequence.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[tuple[int, int], ...], ...] = field(repr=False)
    names: tuple = field(default=(), repr=False, compare=False)
    edge_names: tuple = field(default=(), repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    @classmethod
    def from_edges(cls, n: int, pairs, names=None, edge_names=None) -> "Graph":
        """Build a graph on vertices ``0..n-1``; duplicates collapse, loops raise."""
        seen = {}
        for idx, (a, b) in enumerate(pairs):
            if a == b:
                raise GraphFormatError(f"self-loop on vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise GraphFormatError(f"edge ({a}, {b}) out of range for n={n}")
            key = (a, b) if a < b else (b, a)
            if key not in seen:
                seen[key] = idx if edge_names is None else edge_names[idx]
        edges = tuple(seen)
        adj = [[] for _ in range(n)]
        for eid, (a, b) in enumerate(edges):
            adj[a].append((b, eid))
            adj[b].append((a, eid))
        return cls(
            n=n,
            edges=edges,
            adjacency=tuple(tuple(sorted(row)) for row in adj),
            names=tuple(range(n)) if names is None else tuple(names),
            edge_names=tuple(range(len(edges))) if edge_names is None
            else tuple(seen.values()),
        )

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self.adjacency[v]]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


def parse_graph(text: str | bytes, fmt: str | None = None) -> Graph:
    """Parse an edge list or a DIMACS ``p edge`` file.

    ``fmt`` is ``"edgelist"``, ``"dimacs"`` or ``None`` to sniff the format
    from the presence of a ``p`` header line.
    """
    if isinstance(text, bytes):
        text = text.decode()
    lines = text.splitlines()
    if fmt is None:
        fmt = "dimacs" if any(l.lstrip().startswith("p ") for l in lines) else "edgelist"
    if fmt == "dimacs":
        return _parse_dimacs(lines)
    if fmt == "edgelist":
        return _parse_edgelist(lines)
    raise ValueError(f"unknown graph format {fmt!r}")


def _parse_edgelist(lines) -> Graph:
    ids: dict[int, int] = {}
    pairs = []
    for lineno, line in enumerate(lines, 1):
        tokens = line.split()
        if not tokens or tokens[0].startswith("#"):
            continue
        if len(tokens) != 2:
            raise GraphFormatError(f"expected two vertex ids, got {line.strip()!r}", lineno)
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex id in {line.strip()!r}", lineno) from None
        if a < 0 or b < 0:
            raise GraphFormatError("negative vertex id", lineno)
        if a == b:
            raise GraphFormatError(f"self-loop on vertex {a}", lineno)
        for x in (a, b):
            if x not in ids:
                ids[x] = len(ids)
        pairs.append((ids[a], ids[b]))
    return Graph.from_edges(len(ids), pairs, names=list(ids))


def _parse_dimacs(lines) -> Graph:
    n = None
    pairs = []
    for lineno, line in enumerate(lines, 1):
        tokens = line.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if n is not None:
                raise GraphFormatError("duplicate problem line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise GraphFormatError("expected 'p edge <n> <m>'", lineno)
            try:
                n = int(tokens[2])
                int(tokens[3])
            except ValueError:
                raise GraphFormatError("non-integer size in problem line", lineno) from None
        elif tokens[0] == "e":
            if n is None:
                raise GraphFormatError("edge line before problem line", lineno)
            if len(tokens) != 3:
                raise GraphFormatError("expected 'e <u> <v>'", lineno)
            try:
                a, b = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise GraphFormatError("non-integer vertex id", lineno) from None
            if not (1 <= a <= n and 1 <= b <= n):
                raise GraphFormatError(f"vertex id out of range 1..{n}", lineno)
            if a == b:
                raise GraphFormatError(f"self-loop on vertex {a}", lineno)
            pairs.append((a - 1, b - 1))
        else:
            raise GraphFormatError(f"unknown line type {tokens[0]!r}", lineno)
    if n is None:
        raise GraphFormatError("missing problem line")
    return Graph.from_edges(n, pairs, names=range(1, n + 1))


def to_edgelist(g: Graph) -> str:
    """Canonical text form over vertex names: sorted ``u v`` lines, ``u < v``."""
    names = g.names
    pairs = sorted(tuple(sorted((names[a], names[b]))) for a, b in g.edges)
    return "".join(f"{u} {v}\n" for u, v in pairs)


@dataclass(frozen=True)
class DegeneracyOrdering:
    rank: tuple[int, ...]   # original vertex id -> position
    k: int

    @property
    def order(self) -> list[int]:
        out = [0] * len(self.rank)
        for v, r in enumerate(self.rank):
            out[r] = v
        return out


def degeneracy_ordering(g: Graph) -> DegeneracyOrdering:
    """Peel minimum-degree vertices until none are left.

    Ties go to the smaller original degree, then the smaller id.  Each
    degree bucket is a heap with lazy deletion, so ties resolve
    deterministically at a log factor over the plain bucket queue.
    """
    deg = [g.degree(v) for v in range(g.n)]
    key = [(deg[v], v) for v in range(g.n)]
    buckets: dict[int, list] = {}
    for v in range(g.n):
        buckets.setdefault(deg[v], []).append(key[v])
    for heap in buckets.values():
        heapq.heapify(heap)
    removed = [False] * g.n
    rank = [0] * g.n
    k = 0
    d = 0
    for position in range(g.n):
        d = max(d - 1, 0)
        while True:
            heap = buckets.get(d)
            while heap and (removed[heap[0][1]] or deg[heap[0][1]] != d):
                heapq.heappop(heap)
            if heap:
                break
            d += 1
        v = heapq.heappop(heap)[1]
        removed[v] = True
        rank[v] = position
        k = max(k, d)
        for w, _ in g.adjacency[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(buckets.setdefault(deg[w], []), key[w])
    return DegeneracyOrdering(rank=tuple(rank), k=k)


def relabel(g: Graph, ordering: DegeneracyOrdering) -> Graph:
    """Rename every vertex to its rank; edges are renumbered in (u, v) order."""
    rank = ordering.rank
    names = [None] * g.n
    for v in range(g.n):
        names[rank[v]] = g.names[v]
    renamed = []
    for eid, (a, b) in enumerate(g.edges):
        ra, rb = rank[a], rank[b]
        renamed.append(((ra, rb) if ra < rb else (rb, ra), g.edge_names[eid]))
    renamed.sort()
    return Graph.from_edges(
        g.n,
        [pair for pair, _ in renamed],
        names=names,
        edge_names=[origin for _, origin in renamed],
    )


def larger_neighbor_counts(g: Graph) -> list[int]:
    return [sum(1 for w, _ in g.adjacency[v] if w > v) for v in range(g.n)]
