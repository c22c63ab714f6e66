import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bipenum import Graph, InvariantViolation, OpCounter, SolutionCapExceeded, enumerate_induced
from bipenum.generators import complete, cycle, grid, path, petersen, star
from bipenum.induced import InducedState
from bipenum.oracle import brute_force_induced
from bipenum.runner import prepare


def collect(g, **opts):
    out = []
    enumerate_induced(g, lambda s: out.append(tuple(s)), **opts)
    return out


@pytest.mark.parametrize("g, expected", [
    (complete(3), 6),
    (Graph.from_edges(1, []), 1),
    (cycle(4), 13),
    (cycle(5), 20),
    (path(3), 6),
])
def test_counts(g, expected):
    assert enumerate_induced(g, check=True) == expected


def test_k3_solutions():
    assert sorted(collect(complete(3))) == [(0,), (0, 1), (0, 2), (1,), (1, 2), (2,)]


def test_empty_graph():
    assert enumerate_induced(Graph.from_edges(0, [])) == 0


def test_isolated_vertices_are_solutions():
    assert sorted(collect(Graph.from_edges(3, [(0, 1)]))) == [(0,), (0, 1), (1,), (2,)]


def test_output_order_is_dfs():
    assert collect(path(3)) == [(0,), (0, 1), (0, 1, 2), (1,), (1, 2), (2,)]


def test_p3_root_iteration():
    st_ = InducedState(path(3))
    st_.start(0)
    assert st_.candidates() == [1]
    st_.cand.unlink(1)
    st_.extend(1)
    assert st_.members == [0, 1]
    assert st_.candidates() == [2]      # Add = {2}, nothing removed


def test_k3_children():
    st_ = InducedState(complete(3))
    j = st_.journal
    st_.start(0)
    assert st_.candidates() == [1, 2]
    # first child {0,1}: 2 is on 1's side and adjacent to 1
    st_.cand.unlink(1)
    mark = j.mark()
    st_.extend(1)
    assert st_.candidates() == []
    j.undo_to(mark)
    st_.members.pop()
    st_.remove_vertex(1)
    # second child {0,2} with 1 gone
    assert st_.candidates() == [2]
    st_.cand.unlink(2)
    st_.extend(2)
    assert st_.candidates() == []


def test_star_add_through_center():
    g = Graph.from_edges(3, [(0, 2), (1, 2)])   # center 2, leaves 0 and 1
    st_ = InducedState(g)
    st_.start(0)
    assert st_.candidates() == [2]
    st_.cand.unlink(2)
    st_.extend(2)
    assert st_.candidates() == [1]
    assert st_.side[1] == st_.side[0] != st_.side[2]


def test_side_never_flips():
    g = cycle(6)
    seen = {}
    st_ = InducedState(g)
    st_.start(0)
    while (u := st_.cand.first(0)) is not None:
        st_.cand.unlink(u)
        st_.extend(u)
        for v in st_.members:
            seen.setdefault(v, st_.side[v])
            assert st_.side[v] == seen[v]


@pytest.mark.parametrize("g", [cycle(4), complete(4), petersen(), grid(2, 3)])
def test_restore_exact(g):
    h, _ = prepare(g)
    assert enumerate_induced(h, verify_restore=True, check=True) == len(brute_force_induced(h))


def test_restore_detects_corruption(monkeypatch):
    original = InducedState.extend

    def leaky(self, u):
        original(self, u)
        self.visited.append(False)    # unjournaled growth survives undo

    monkeypatch.setattr(InducedState, "extend", leaky)
    with pytest.raises(InvariantViolation, match="not restored"):
        enumerate_induced(cycle(4), verify_restore=True)


def test_check_mode_catches_missing_delta(monkeypatch):
    def no_delta(self, u):
        self._drop_candidate(u)
        self.journal.assign(self.in_s, u, True)
        self.members.append(u)
        self._add_candidates(u)

    monkeypatch.setattr(InducedState, "extend", no_delta)
    with pytest.raises(InvariantViolation):
        enumerate_induced(complete(3), check=True)


def test_sink_exception_propagates():
    def boom(sol):
        if len(sol) == 2:
            raise KeyError("stop")

    with pytest.raises(KeyError):
        enumerate_induced(cycle(5), boom)


def test_cap():
    with pytest.raises(SolutionCapExceeded):
        enumerate_induced(path(10), cap=54)
    assert enumerate_induced(path(10), cap=55) == 55


@pytest.mark.parametrize("n", range(1, 13))
def test_path_closed_form(n):
    assert enumerate_induced(path(n)) == n * (n + 1) // 2


def test_deep_path_needs_no_recursion():
    assert enumerate_induced(path(3000), cap=None, roots=[0]) == 3000


def test_counters_track_work():
    c = OpCounter()
    enumerate_induced(grid(3, 3), counter=c)
    assert c.edits > 0 and c.undos > 0 and c.scans > 0
    assert c.peak_log > 0 and c.structure > 0


graphs = st.integers(1, 8).flatmap(
    lambda n: st.builds(
        lambda pairs: Graph.from_edges(n, [(a, b) for a, b in pairs if a != b]),
        st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=28),
    )
)


@settings(max_examples=200, deadline=None)
@given(graphs, st.booleans())
def test_matches_oracle(g, relabeled):
    if relabeled:
        g, _ = prepare(g)
    out = collect(g, check=True)
    assert len(out) == len(set(out))
    assert set(out) == brute_force_induced(g)
