import pytest

from bipenum import Graph
from bipenum.generators import FAMILIES, petersen
from bipenum.runner import parse_sizes, run, sweep, verify


@pytest.mark.parametrize("spec, sizes", [("3..5", [3, 4, 5]), ("8,10", [8, 10]), ("7", [7])])
def test_parse_sizes(spec, sizes):
    assert parse_sizes(spec) == sizes


def test_verify_translates_ids():
    # input edge order deliberately differs from the relabeled (u, v) order
    g = Graph.from_edges(5, [(3, 4), (0, 4), (1, 2), (2, 3), (0, 1), (1, 3)])
    for mode in ("induced", "edge"):
        verdict = verify(g, mode)
        assert verdict.ok and verdict.first_discrepancy() is None


def test_report_fields():
    r = run(petersen(), "edge")
    assert r.k == 3 and r.solutions > 0
    d = r.as_dict()
    assert d["edits_per_solution"] == r.counters["edits"] / r.solutions
    assert d["space_ratio"] > 0


@pytest.mark.parametrize("family", sorted(FAMILIES))
def test_sweeps_are_deterministic(family):
    a = [(s, r.solutions, r.counters["edits"]) for s, r in sweep("edge", family, [3, 4], seed=4)]
    b = [(s, r.solutions, r.counters["edits"]) for s, r in sweep("edge", family, [3, 4], seed=4)]
    assert a == b
