"""Exact counting of strong Kleene truth-table rows over bracketed implication chains."""

from kleene_chains.logic import (
    Assignment,
    BracketTree,
    Leaf,
    Node,
    TruthValue,
    enumerate_trees,
    evaluate,
    implies,
)

__all__ = [
    "Assignment",
    "BracketTree",
    "Leaf",
    "Node",
    "TruthValue",
    "enumerate_trees",
    "evaluate",
    "implies",
]

__version__ = "0.1.0"
