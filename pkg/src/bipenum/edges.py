"""Connected bipartite edge sets.

State for the current edge set F:

* ``label[v]`` in {0, 1, 2}; nonzero exactly on V(F) and proper on F.
* ``ne``: sorted list of the edges that can extend F (the child generators).
* per vertex v outside V(F), three arc lists ``N0/N1/N2`` holding the live
  edges at v whose other endpoint is unlabeled / labeled 1 / labeled 2.
  Once v is labeled its lists are frozen until the label is undone.

Because odd-cycle-closing edges are deleted as soon as they appear, every
live edge touching V(F) and not in F is a child generator.
"""
from __future__ import annotations

from collections import deque
from typing import Callable

from .graph import Graph
from .induced import InvariantViolation
from .journal import Journal, ListPool, OpCounter, SolutionCapExceeded


class EdgeState:
    def __init__(self, g: Graph, counter: OpCounter | None = None):
        n, m = g.n, g.m
        self.g = g
        self.journal = Journal(counter)
        self.counter = self.journal.counter
        self.in_f = [False] * m
        self.alive = [True] * m
        self.label = [0] * n
        self.ne = ListPool(m, 1, self.journal)
        # arc 2e lives at the smaller endpoint of e, arc 2e+1 at the larger
        self.nl = ListPool(2 * m, 3 * n, self.journal)
        self.owner = [0] * (2 * m)
        for eid, (a, b) in enumerate(g.edges):
            self.owner[2 * eid] = a
            self.owner[2 * eid + 1] = b
        for v in range(n):
            for _, eid in sorted(g.adjacency[v], key=lambda t: t[1]):
                arc = 2 * eid if g.edges[eid][0] == v else 2 * eid + 1
                self.nl.build(arc, 3 * v)
        self.members: list[int] = []

    def structure_size(self) -> int:
        return self.ne.size() + self.nl.size() + 3 * self.g.m + self.g.n

    def candidates(self) -> list[int]:
        return self.ne.items(0)

    def _set_label(self, w: int, lab: int) -> None:
        """Label ``w``; its unlabeled neighbours re-file their arc to ``w``."""
        self.journal.assign(self.label, w, lab)
        nl = self.nl
        for arc in nl.items(3 * w):
            other = arc ^ 1
            nl.move(other, 3 * self.owner[other] + lab)

    def remove_edge(self, e: int) -> None:
        """Delete ``e`` from the working graph."""
        self.journal.assign(self.alive, e, False)
        a, b = self.g.edges[e]
        if not self.label[a]:
            self.nl.unlink(2 * e)
        if not self.label[b]:
            self.nl.unlink(2 * e + 1)

    def _splice(self, new: list[int]) -> None:
        """Merge the ascending edge ids ``new`` into ``ne``."""
        ne = self.ne
        sentinel = ne.sentinel(0)
        nxt = ne.nxt
        pos = nxt[sentinel]
        walked = 0
        for f in new:
            while pos != sentinel and pos < f:
                pos = nxt[pos]
                walked += 1
            ne.insert_before(f, pos, 0)
        self.counter.scans += walked

    def start(self, e: int) -> None:
        """F = {e} with NE = the live edges adjacent to e."""
        j = self.journal
        j.assign(self.in_f, e, True)
        self.members.append(e)
        a, b = self.g.edges[e]
        # before labeling, N0 of each endpoint holds all its live edges
        fresh = [f >> 1 for f in self.nl.items(3 * a) + self.nl.items(3 * b)]
        self._set_label(a, 1)
        self._set_label(b, 2)
        self._splice(sorted(f for f in fresh if f != e))

    def extend(self, e: int) -> None:
        """Turn the state for F into the state for F + {e}.

        ``e`` must already be unlinked from ``ne``.  If e brings a new vertex
        w, w's edges to vertices that will share its label close odd cycles
        and are deleted; w's edges to unlabeled vertices become candidates.
        """
        j = self.journal
        j.assign(self.in_f, e, True)
        self.members.append(e)
        a, b = self.g.edges[e]
        label = self.label
        if label[a] and label[b]:
            return
        w, x = (a, b) if not label[a] else (b, a)
        lab = 3 - label[x]
        nl, ne = self.nl, self.ne
        for arc in nl.items(3 * w + lab):
            f = arc >> 1
            ne.unlink(f)
            j.assign(self.alive, f, False)
        fresh = [arc >> 1 for arc in nl.items(3 * w)]
        self._set_label(w, lab)
        self._splice(fresh)

    def snapshot(self) -> tuple:
        return (
            tuple(self.in_f), tuple(self.alive), tuple(self.label),
            tuple(self.members), self.ne.snapshot(), self.nl.snapshot(),
        )

    def check_invariants(self) -> None:
        g = self.g
        F = set(self.members)
        if F != {e for e in range(g.m) if self.in_f[e]}:
            raise InvariantViolation("member stack disagrees with in_f flags")
        covered = {v for e in F for v in g.edges[e]}
        if covered != {v for v in range(g.n) if self.label[v]}:
            raise InvariantViolation("labels are not exactly V(F)")
        for e in F:
            a, b = g.edges[e]
            if self.label[a] == self.label[b]:
                raise InvariantViolation(f"edge {e} of F is monochromatic")
        listed = self.candidates()
        if listed != sorted(listed):
            raise InvariantViolation(f"NE not sorted: {listed}")
        expected = []
        for f in range(g.m):
            if not self.alive[f] or f in F:
                continue
            a, b = g.edges[f]
            if a not in covered and b not in covered:
                continue
            if a in covered and b in covered and self.label[a] == self.label[b]:
                raise InvariantViolation(f"odd-cycle edge {f} still alive")
            if _edge_set_bipartite(g, F | {f}):
                expected.append(f)
        if listed != expected:
            raise InvariantViolation(f"F={sorted(F)}: NE {listed} != {expected}")
        for v in range(g.n):
            if self.label[v]:
                continue
            for lab in range(3):
                for arc in self.nl.items(3 * v + lab):
                    f = arc >> 1
                    other = self.owner[arc ^ 1]
                    if not self.alive[f] or self.label[other] != lab or self.owner[arc] != v:
                        raise InvariantViolation(f"arc of edge {f} misfiled at {v}")
            held = sorted(arc >> 1 for lab in range(3) for arc in self.nl.items(3 * v + lab))
            want = sorted(eid for _, eid in g.adjacency[v] if self.alive[eid])
            if held != want:
                raise InvariantViolation(f"N lists of {v} do not cover its live edges")


def _edge_set_bipartite(g: Graph, es) -> bool:
    adj: dict[int, list[int]] = {}
    for e in es:
        a, b = g.edges[e]
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    color = {}
    for s in adj:
        if s in color:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in color:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def enumerate_edge_subgraphs(
    g: Graph,
    sink: Callable[[list[int]], object] | None = None,
    *,
    counter: OpCounter | None = None,
    check: bool = False,
    verify_restore: bool = False,
    cap: int | None = None,
) -> int:
    """Emit every connected bipartite edge set of ``g`` once.

    Edges are processed in edge-id order.  ``sink`` gets each solution as a
    sorted edge-id list.  Returns the number of solutions.
    """
    st = EdgeState(g, counter)
    if counter is not None:
        counter.structure = max(counter.structure, st.structure_size())
    journal, ne, members = st.journal, st.ne, st.members
    count = 0

    def emit():
        nonlocal count
        count += 1
        if cap is not None and count > cap:
            raise SolutionCapExceeded(cap)
        if check:
            st.check_invariants()
        if sink is not None:
            sink(sorted(members))

    for e0 in range(g.m):
        base = journal.mark()
        st.start(e0)
        emit()
        frames = []
        while True:
            e = ne.first(0)
            if e is not None:
                ne.unlink(e)
                snap = st.snapshot() if verify_restore else None
                frames.append((journal.mark(), e, snap))
                st.extend(e)
                emit()
                continue
            if not frames:
                break
            mark, e, snap = frames.pop()
            journal.undo_to(mark)
            members.pop()
            if verify_restore and st.snapshot() != snap:
                raise InvariantViolation(f"state not restored after child {members + [e]}")
            st.remove_edge(e)
        journal.undo_to(base)
        members.clear()
        st.remove_edge(e0)
        journal.forget()
    return count
