import pytest

from bipenum.journal import Journal, ListPool, OpCounter


@pytest.fixture
def pool():
    j = Journal()
    p = ListPool(6, 2, j)
    for v in (0, 2, 4, 5):
        p.build(v, 0)
    p.build(1, 1)
    return p


def test_empty_frame_restores_nothing(pool):
    before = pool.snapshot()
    mark = pool.journal.mark()
    pool.journal.undo_to(mark)
    assert pool.snapshot() == before
    assert pool.journal.counter.undos == 0


def test_unlink_restores_position(pool):
    before = pool.snapshot()
    mark = pool.journal.mark()
    pool.unlink(4)
    assert pool.items(0) == [0, 2, 5]
    pool.journal.undo_to(mark)
    assert pool.items(0) == [0, 2, 4, 5]
    assert pool.snapshot() == before


def test_nested_edits_undo_in_order(pool):
    before = pool.snapshot()
    j = pool.journal
    flags = [False] * 3
    mark = j.mark()
    pool.unlink(0)
    j.assign(flags, 1, True)
    pool.move(2, 1)
    pool.insert_before(3, 5, 0)
    assert pool.items(0) == [4, 3, 5]
    assert pool.items(1) == [1, 2]
    inner = j.mark()
    pool.unlink(5)
    j.undo_to(inner)
    assert pool.items(0) == [4, 3, 5]
    j.undo_to(mark)
    assert pool.snapshot() == before
    assert flags == [False, False, False]


def test_counters_and_peak():
    c = OpCounter()
    j = Journal(c)
    arr = [0, 0]
    j.assign(arr, 0, 1)
    j.assign(arr, 1, 1)
    j.undo_to(0)
    assert (c.edits, c.undos, c.peak_log) == (2, 2, 2)
    assert c.work == 4


def test_underflow_is_an_error():
    j = Journal()
    with pytest.raises(RuntimeError, match="underflow"):
        j.undo_to(3)


def test_detached_nodes_point_at_themselves(pool):
    pool.unlink(2)
    assert pool.nxt[2] == 2 and pool.prv[2] == 2
    assert pool.home[2] == -1
