"""Undo journal and index-based doubly linked lists.

Every mutation made through a :class:`Journal` is pushed onto a log and can be
rolled back to any earlier mark.  Rollback is strictly LIFO, which is what lets
an unlinked node be put back at its old position from the two neighbours it
had when it left.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass

_ASSIGN = 0
_UNLINK = 1
_LINK = 2


@dataclass
class OpCounter:
    """Elementary-operation tallies.

    ``edits`` counts forward list unlinks/links and flag or label writes,
    ``undos`` counts their reversals and ``scans`` counts list elements or
    adjacency entries inspected without being changed.
    """

    edits: int = 0
    undos: int = 0
    scans: int = 0
    peak_log: int = 0
    structure: int = 0

    @property
    def work(self) -> int:
        return self.edits + self.undos + self.scans

    def as_dict(self) -> dict:
        d = asdict(self)
        d["work"] = self.work
        return d


class SolutionCapExceeded(RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"more than {cap} solutions")
        self.cap = cap


class Journal:
    def __init__(self, counter: OpCounter | None = None):
        self.log: list[tuple] = []
        self.counter = counter if counter is not None else OpCounter()

    def mark(self) -> int:
        return len(self.log)

    def _push(self, rec):
        log = self.log
        log.append(rec)
        c = self.counter
        c.edits += 1
        if len(log) > c.peak_log:
            c.peak_log = len(log)

    def assign(self, arr: list, i: int, value) -> None:
        self._push((_ASSIGN, arr, i, arr[i]))
        arr[i] = value

    def undo_to(self, mark: int) -> None:
        log = self.log
        if mark > len(log):
            raise RuntimeError(f"journal underflow: mark {mark} > length {len(log)}")
        c = self.counter
        while len(log) > mark:
            rec = log.pop()
            c.undos += 1
            kind = rec[0]
            if kind == _ASSIGN:
                rec[1][rec[2]] = rec[3]
            elif kind == _UNLINK:
                _, pool, node, lst, p, q = rec
                pool.nxt[p] = node
                pool.prv[q] = node
                pool.prv[node] = p
                pool.nxt[node] = q
                pool.home[node] = lst
            else:
                rec[1]._detach(rec[2])

    def forget(self) -> None:
        """Drop the log; everything applied so far becomes permanent."""
        self.log.clear()


class ListPool:
    """A family of doubly linked lists over nodes ``0..nnodes-1``.

    A node belongs to at most one list at a time (``home[node]``, or -1).
    List ``L`` is anchored by sentinel ``nnodes + L``.  Detached nodes point
    at themselves so two equal logical states are equal array-for-array.
    """

    def __init__(self, nnodes: int, nlists: int, journal: Journal):
        size = nnodes + nlists
        self.base = nnodes
        self.nxt = list(range(size))
        self.prv = list(range(size))
        self.home = [-1] * nnodes
        self.journal = journal

    def sentinel(self, lst: int) -> int:
        return self.base + lst

    def first(self, lst: int) -> int | None:
        node = self.nxt[self.base + lst]
        return None if node >= self.base else node

    def is_empty(self, lst: int) -> bool:
        return self.nxt[self.base + lst] == self.base + lst

    def items(self, lst: int) -> list[int]:
        """Contents of ``lst`` in order; each element is tallied as a scan."""
        out = []
        nxt = self.nxt
        s = self.base + lst
        node = nxt[s]
        while node != s:
            out.append(node)
            node = nxt[node]
        self.journal.counter.scans += len(out)
        return out

    # mutations, all journaled

    def unlink(self, node: int) -> None:
        p, q = self.prv[node], self.nxt[node]
        self.journal._push((_UNLINK, self, node, self.home[node], p, q))
        self.nxt[p] = q
        self.prv[q] = p
        self.nxt[node] = self.prv[node] = node
        self.home[node] = -1

    def insert_before(self, node: int, succ: int, lst: int) -> None:
        """Link detached ``node`` into ``lst`` right before ``succ`` (node or sentinel)."""
        self.journal._push((_LINK, self, node))
        p = self.prv[succ]
        self.nxt[p] = node
        self.prv[node] = p
        self.nxt[node] = succ
        self.prv[succ] = node
        self.home[node] = lst

    def append(self, node: int, lst: int) -> None:
        self.insert_before(node, self.base + lst, lst)

    def move(self, node: int, lst: int) -> None:
        self.unlink(node)
        self.append(node, lst)

    def _detach(self, node: int) -> None:
        p, q = self.prv[node], self.nxt[node]
        self.nxt[p] = q
        self.prv[q] = p
        self.nxt[node] = self.prv[node] = node
        self.home[node] = -1

    def build(self, node: int, lst: int) -> None:
        """Unjournaled append, for initial construction only."""
        s = self.base + lst
        p = self.prv[s]
        self.nxt[p] = node
        self.prv[node] = p
        self.nxt[node] = s
        self.prv[s] = node
        self.home[node] = lst

    def snapshot(self) -> tuple:
        return (tuple(self.nxt), tuple(self.prv), tuple(self.home))

    def size(self) -> int:
        return len(self.nxt)
