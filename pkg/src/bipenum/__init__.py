"""Enumeration of connected bipartite induced subgraphs and edge subgraphs."""
from .graph import (
    DegeneracyOrdering,
    Graph,
    GraphFormatError,
    degeneracy_ordering,
    parse_graph,
    relabel,
    to_edgelist,
)
from .journal import OpCounter, SolutionCapExceeded
from .induced import InvariantViolation, enumerate_induced

__all__ = [
    "DegeneracyOrdering",
    "Graph",
    "GraphFormatError",
    "InvariantViolation",
    "OpCounter",
    "SolutionCapExceeded",
    "degeneracy_ordering",
    "enumerate_induced",
    "parse_graph",
    "relabel",
    "to_edgelist",
]
