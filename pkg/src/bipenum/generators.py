"""Seeded graph families for tests and benchmarks."""
from __future__ import annotations

import random

from .graph import Graph


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def grid(rows: int, cols: int) -> Graph:
    pairs = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                pairs.append((v, v + 1))
            if r + 1 < rows:
                pairs.append((v, v + cols))
    return Graph.from_edges(rows * cols, pairs)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def gnp(n: int, p: float, seed) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(
        n, [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p]
    )


def gnm(n: int, m: int, seed) -> Graph:
    rng = random.Random(seed)
    all_pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    return Graph.from_edges(n, rng.sample(all_pairs, min(m, len(all_pairs))))


def k_degenerate(n: int, k: int, seed) -> Graph:
    """Each new vertex attaches to up to ``k`` random earlier vertices (at least one)."""
    rng = random.Random(seed)
    pairs = []
    for v in range(1, n):
        d = rng.randint(1, min(k, v))
        pairs.extend((u, v) for u in rng.sample(range(v), d))
    return Graph.from_edges(n, pairs)


FAMILIES = {
    "path": lambda size, seed: path(size),
    "cycle": lambda size, seed: cycle(size),
    "grid": lambda size, seed: grid(3, size),
    "gnm": lambda size, seed: gnm(size, size + size // 4, seed),
    "kdeg": lambda size, seed: k_degenerate(size, 2, seed),
}
