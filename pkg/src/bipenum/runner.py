"""Run, verify and benchmark the enumerators on an input graph."""
from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field

from . import generators
from .edges import enumerate_edge_subgraphs
from .graph import Graph, degeneracy_ordering, relabel
from .induced import enumerate_induced
from .journal import OpCounter
from .oracle import brute_force_edge, brute_force_induced

MODES = ("induced", "edge")
DEFAULT_CAP = 10**7


@dataclass
class RunReport:
    mode: str
    n: int
    m: int
    k: int
    solutions: int = 0
    wall_time: float = 0.0
    counters: dict = field(default_factory=dict)

    @property
    def edits_per_solution(self) -> float:
        return self.counters.get("edits", 0) / self.solutions if self.solutions else 0.0

    @property
    def work_per_solution(self) -> float:
        return self.counters.get("work", 0) / self.solutions if self.solutions else 0.0

    @property
    def space_ratio(self) -> float:
        c = self.counters
        return (c.get("peak_log", 0) + c.get("structure", 0)) / max(self.n + self.m, 1)

    def as_dict(self) -> dict:
        d = asdict(self)
        d.update(
            edits_per_solution=self.edits_per_solution,
            work_per_solution=self.work_per_solution,
            space_ratio=self.space_ratio,
        )
        return d


def prepare(g: Graph) -> tuple[Graph, int]:
    """Relabel ``g`` by its degeneracy ordering; returns the new graph and k."""
    ordering = degeneracy_ordering(g)
    return relabel(g, ordering), ordering.k


def run(g: Graph, mode: str, sink=None, cap: int | None = DEFAULT_CAP, **opts) -> RunReport:
    """Enumerate on the relabeled ``g``; ``sink`` sees relabeled ids."""
    h, k = prepare(g)
    counter = OpCounter()
    enumerate_fn = enumerate_induced if mode == "induced" else enumerate_edge_subgraphs
    t0 = time.perf_counter()
    count = enumerate_fn(h, sink, counter=counter, cap=cap, **opts)
    report = RunReport(mode=mode, n=g.n, m=g.m, k=k, solutions=count)
    report.wall_time = time.perf_counter() - t0
    report.counters = counter.as_dict()
    return report


@dataclass
class Verdict:
    ok: bool
    solutions: int
    expected: int
    missing: list = field(default_factory=list)
    extra: list = field(default_factory=list)
    duplicates: list = field(default_factory=list)

    def first_discrepancy(self) -> str | None:
        if self.missing:
            return f"missing solution {list(self.missing[0])}"
        if self.extra:
            return f"extra solution {list(self.extra[0])}"
        if self.duplicates:
            return f"duplicate solution {list(self.duplicates[0])}"
        return None


def verify(g: Graph, mode: str, limit: int = 20) -> Verdict:
    """Compare the fast enumerator against the brute-force oracle.

    Solutions are translated back to ``g``'s own ids before comparing.
    """
    expected = brute_force_induced(g, limit) if mode == "induced" else brute_force_edge(g, limit)
    h, _ = prepare(g)
    if mode == "induced":
        back = degeneracy_ordering(g).order
    else:
        back = h.edge_names
    got: list[tuple] = []
    run_fn = enumerate_induced if mode == "induced" else enumerate_edge_subgraphs
    run_fn(h, lambda sol: got.append(tuple(sorted(back[x] for x in sol))))
    seen = set()
    dups = []
    for sol in got:
        if sol in seen:
            dups.append(sol)
        seen.add(sol)
    missing = sorted(expected - seen)
    extra = sorted(seen - expected)
    return Verdict(
        ok=not (missing or extra or dups),
        solutions=len(got),
        expected=len(expected),
        missing=missing,
        extra=extra,
        duplicates=dups,
    )


def parse_sizes(spec: str) -> list[int]:
    """``"3..6"`` or ``"8,10,12"`` -> list of sizes."""
    if ".." in spec:
        lo, hi = spec.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(s) for s in spec.split(",") if s]


def sweep(mode: str, family: str, sizes, seed: int = 0, cap: int | None = DEFAULT_CAP):
    """One :class:`RunReport` per size; raises SolutionCapExceeded with ``.size`` set."""
    make = generators.FAMILIES[family]
    rows = []
    for size in sizes:
        g = make(size, seed)
        try:
            rows.append((size, run(g, mode, cap=cap)))
        except Exception as exc:
            exc.size = size
            raise
    return rows
