"""Connected bipartite induced subgraphs, one binary-partition step at a time.

The working state is edited in place and journaled.  Going down into a child
applies the edits for ``S + {u}``; coming back undoes them, after which ``u``
is deleted from the working graph for the remaining siblings.

Per-vertex neighbour lists (arcs of a vertex ``v``):

* ``LN``      neighbours larger than ``v`` (fixed membership, at most k)
* ``VSN_C``   smaller neighbours in N[S] that are candidates
* ``VSN_NC``  smaller neighbours in N[S] that are not candidates
* ``USN``     smaller neighbours outside N[S]

A deleted vertex is unlinked only from the lists of its larger neighbours.
"""
from __future__ import annotations

from collections import deque
from typing import Callable, Iterable

from .graph import Graph
from .journal import Journal, ListPool, OpCounter, SolutionCapExceeded

LN, VSN_C, VSN_NC, USN = range(4)
LEFT, RIGHT = 1, 2


class InvariantViolation(AssertionError):
    pass


class InducedState:
    def __init__(self, g: Graph, counter: OpCounter | None = None):
        n, m = g.n, g.m
        self.g = g
        self.journal = Journal(counter)
        self.counter = self.journal.counter
        self.in_s = [False] * n
        self.side = [0] * n
        self.alive = [True] * n
        self.visited = [False] * n      # member of N[S]
        self.is_cand = [False] * n
        self.cand = ListPool(n, 1, self.journal)
        self.nbrs = ListPool(2 * m, 4 * n, self.journal)
        # arc 2e sits in the lists of the smaller endpoint of e, 2e+1 in the other's
        self.target = [0] * (2 * m)
        for eid, (a, b) in enumerate(g.edges):
            self.target[2 * eid] = b
            self.target[2 * eid + 1] = a
        for v in range(n):
            for w, eid in g.adjacency[v]:
                if w > v:
                    self.nbrs.build(2 * eid, 4 * v + LN)
                else:
                    self.nbrs.build(2 * eid + 1, 4 * v + USN)
        self.members: list[int] = []

    def structure_size(self) -> int:
        return self.cand.size() + self.nbrs.size() + 5 * self.g.n + len(self.target)

    def candidates(self) -> list[int]:
        return self.cand.items(0)

    # primitive transitions

    def _visit(self, w: int, side: int, as_cand: bool) -> None:
        j = self.journal
        j.assign(self.visited, w, True)
        j.assign(self.side, w, side)
        if as_cand:
            j.assign(self.is_cand, w, True)
        dest = VSN_C if as_cand else VSN_NC
        alive, nbrs, target = self.alive, self.nbrs, self.target
        for arc in nbrs.items(4 * w + LN):
            x = target[arc]
            if alive[x]:
                nbrs.move(arc ^ 1, 4 * x + dest)

    def _drop_candidate(self, w: int) -> None:
        self.journal.assign(self.is_cand, w, False)
        alive, nbrs, target = self.alive, self.nbrs, self.target
        for arc in nbrs.items(4 * w + LN):
            x = target[arc]
            if alive[x]:
                nbrs.move(arc ^ 1, 4 * x + VSN_NC)

    def remove_vertex(self, u: int) -> None:
        """Delete ``u`` from the working graph: O(k) list edits."""
        self.journal.assign(self.alive, u, False)
        alive, nbrs, target = self.alive, self.nbrs, self.target
        for arc in nbrs.items(4 * u + LN):
            if alive[target[arc]]:
                nbrs.unlink(arc ^ 1)

    def _add_candidates(self, u: int) -> None:
        """Put every unvisited live neighbour of ``u`` into the candidate list."""
        side = LEFT + RIGHT - self.side[u]
        alive, visited, target = self.alive, self.visited, self.target
        # unvisited smaller neighbours are exactly USN(u); all are alive
        low = [target[a] for a in self.nbrs.items(4 * u + USN)]
        high = []
        for a in self.nbrs.items(4 * u + LN):
            x = target[a]
            if alive[x] and not visited[x]:
                high.append(x)
        for x in low:
            self._visit(x, side, True)
        for x in high:
            self._visit(x, side, True)

        cand = self.cand
        sentinel = cand.sentinel(0)
        head = cand.nxt[sentinel]
        # every remaining candidate is larger than u, so ``low`` goes in front
        for x in low:
            cand.insert_before(x, head, 0)
        pos = head
        nxt = cand.nxt
        walked = 0
        for x in high:
            while pos != sentinel and pos < x:
                pos = nxt[pos]
                walked += 1
            cand.insert_before(x, pos, 0)
        self.counter.scans += walked

    def start(self, r: int) -> None:
        """Set up S = {r} with CAND = N(r) in the current working graph."""
        self.journal.assign(self.in_s, r, True)
        self._visit(r, LEFT, False)
        self.members.append(r)
        self._add_candidates(r)

    def extend(self, u: int) -> None:
        """Turn the state for S into the state for S + {u}.

        ``u`` must already be unlinked from the candidate list.  Candidates on
        u's side adjacent to u are discarded, then u's untouched neighbours
        join on the opposite side.
        """
        self._drop_candidate(u)
        self.journal.assign(self.in_s, u, True)
        self.members.append(u)
        su = self.side[u]
        alive, is_cand, side, target = self.alive, self.is_cand, self.side, self.target
        for arc in self.nbrs.items(4 * u + LN):
            x = target[arc]
            if alive[x] and is_cand[x] and side[x] == su:
                self.cand.unlink(x)
                self._drop_candidate(x)
        self._add_candidates(u)

    def snapshot(self) -> tuple:
        return (
            tuple(self.in_s), tuple(self.side), tuple(self.alive),
            tuple(self.visited), tuple(self.is_cand), tuple(self.members),
            self.cand.snapshot(), self.nbrs.snapshot(),
        )

    # debug-mode verification

    def check_invariants(self) -> None:
        g = self.g
        S = set(self.members)
        if S != {v for v in range(g.n) if self.in_s[v]}:
            raise InvariantViolation("member stack disagrees with in_s flags")
        for v in S:
            for w in g.neighbors(v):
                if w in S and self.side[v] == self.side[w]:
                    raise InvariantViolation(f"edge {v}-{w} inside S is monochromatic")
        listed = self.candidates()
        if listed != sorted(listed):
            raise InvariantViolation(f"candidate list not sorted: {listed}")
        expected = [v for v in range(g.n)
                    if self.alive[v] and v not in S and _connected_bipartite(g, S | {v})]
        if listed != expected:
            raise InvariantViolation(f"S={sorted(S)}: CAND {listed} != {expected}")
        for v in listed:
            if not self.is_cand[v]:
                raise InvariantViolation(f"{v} listed but not flagged")
            larger_in_s = sum(1 for w in g.neighbors(v) if w > v and w in S)
            if larger_in_s > 1:
                raise InvariantViolation(f"candidate {v} has {larger_in_s} larger neighbours in S")
            if any(w in S and self.side[w] == self.side[v] for w in g.neighbors(v)):
                raise InvariantViolation(f"candidate {v} has the wrong side")
        near = S.union(*(g.neighbors(v) for v in S)) if S else set()
        for v in range(g.n):
            if not self.alive[v]:
                continue
            if self.visited[v] != (v in near):
                raise InvariantViolation(f"visited flag of {v} is stale")
            seen = []
            for kind in range(4):
                for arc in self.nbrs.items(4 * v + kind):
                    x = self.target[arc]
                    seen.append(x)
                    if kind == LN:
                        ok = x > v
                    elif kind == USN:
                        ok = x < v and not self.visited[x]
                    elif kind == VSN_C:
                        ok = x < v and self.is_cand[x]
                    else:
                        ok = x < v and self.visited[x] and not self.is_cand[x]
                    if not ok:
                        raise InvariantViolation(f"arc {v}->{x} in wrong list {kind}")
            want = [x for x in g.neighbors(v) if x > v or self.alive[x]]
            if sorted(seen) != want:
                raise InvariantViolation(f"neighbour lists of {v} do not partition N({v})")


def _connected_bipartite(g: Graph, vs: set[int]) -> bool:
    start = next(iter(vs))
    color = {start: 0}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w not in vs:
                continue
            if w not in color:
                color[w] = 1 - color[v]
                queue.append(w)
            elif color[w] == color[v]:
                return False
    return len(color) == len(vs)


def enumerate_induced(
    g: Graph,
    sink: Callable[[list[int]], object] | None = None,
    *,
    counter: OpCounter | None = None,
    check: bool = False,
    verify_restore: bool = False,
    cap: int | None = None,
    roots: Iterable[int] | None = None,
) -> int:
    """Emit every connected bipartite induced vertex set of ``g`` once.

    ``g`` should be relabeled by a degeneracy ordering for the O(k) bound;
    correctness does not depend on it.  ``sink`` gets each solution as a
    sorted vertex list.  Returns the number of solutions.

    ``check`` recomputes the candidate set and list invariants at every
    iteration; ``verify_restore`` compares full state snapshots around
    every child call.  Both raise :class:`InvariantViolation`.
    """
    st = InducedState(g, counter)
    if counter is not None:
        counter.structure = max(counter.structure, st.structure_size())
    journal, cand, members = st.journal, st.cand, st.members
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

    for r in range(g.n) if roots is None else roots:
        base = journal.mark()
        st.start(r)
        emit()
        frames = []
        while True:
            u = cand.first(0)
            if u is not None:
                cand.unlink(u)
                snap = st.snapshot() if verify_restore else None
                frames.append((journal.mark(), u, snap))
                st.extend(u)
                emit()
                continue
            if not frames:
                break
            mark, u, snap = frames.pop()
            journal.undo_to(mark)
            members.pop()
            if verify_restore and st.snapshot() != snap:
                raise InvariantViolation(f"state not restored after child {members + [u]}")
            st.remove_vertex(u)
        journal.undo_to(base)
        members.clear()
        st.remove_vertex(r)
        journal.forget()
    return count
