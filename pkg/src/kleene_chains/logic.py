"""Three-valued truth values, Kleene implication and bracketings of p1 > p2 > ... > pn.

Leaf indices are 1-based (``Leaf(1)`` is p1) while assignments are ordinary
0-based sequences, so ``Leaf(i)`` reads ``assignment[i - 1]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache
from typing import Sequence, Union


class TruthValue(IntEnum):
    FALSE = 0
    TRUE = 1
    UNKNOWN = 2

    def neg(self) -> "TruthValue":
        if self is TruthValue.UNKNOWN:
            return self
        return TruthValue(1 - self)

    @property
    def rank(self) -> int:
        """Position in the order False < Unknown < True."""
        return _RANK[self]


_RANK = {TruthValue.FALSE: 0, TruthValue.UNKNOWN: 1, TruthValue.TRUE: 2}

F, T, U = TruthValue.FALSE, TruthValue.TRUE, TruthValue.UNKNOWN

# IMPLIES[a][b] is a => b
IMPLIES: tuple[tuple[TruthValue, ...], ...] = (
    (T, T, T),  # 0 => 0, 1, 2
    (F, T, U),  # 1 => 0, 1, 2
    (U, T, U),  # 2 => 0, 1, 2
)


def implies(a: int, b: int) -> TruthValue:
    return IMPLIES[a][b]


@dataclass(frozen=True)
class Leaf:
    index: int

    @property
    def size(self) -> int:
        return 1

    def __str__(self) -> str:
        return f"p{self.index}"


@dataclass(frozen=True)
class Node:
    left: "BracketTree"
    right: "BracketTree"

    @property
    def size(self) -> int:
        return self.left.size + self.right.size

    def __str__(self) -> str:
        return f"({self.left}>{self.right})"


BracketTree = Union[Leaf, Node]
Assignment = Sequence[int]


def leaves(tree: BracketTree) -> list[int]:
    if isinstance(tree, Leaf):
        return [tree.index]
    return leaves(tree.left) + leaves(tree.right)


def internal_nodes(tree: BracketTree) -> int:
    if isinstance(tree, Leaf):
        return 0
    return 1 + internal_nodes(tree.left) + internal_nodes(tree.right)


def evaluate(tree: BracketTree, assignment: Assignment) -> TruthValue:
    """Value of ``tree`` when ``p_i`` takes ``assignment[i - 1]``."""
    if len(assignment) != tree.size:
        raise ValueError(
            f"assignment has {len(assignment)} values but the tree has {tree.size} leaves"
        )
    return _evaluate(tree, assignment)


def _evaluate(tree: BracketTree, assignment: Assignment) -> TruthValue:
    if isinstance(tree, Leaf):
        return TruthValue(assignment[tree.index - 1])
    return IMPLIES[_evaluate(tree.left, assignment)][_evaluate(tree.right, assignment)]


def enumerate_trees(n: int) -> tuple[BracketTree, ...]:
    """All bracketings of a chain of ``n`` variables.

    Ordered by root split (left subtree holds p1..pi, i = 1..n-1), then
    lexicographically over the left and right sub-enumerations.
    """
    if n < 1:
        raise ValueError(f"need at least one variable, got n={n}")
    return _trees(1, n)


@lru_cache(maxsize=None)
def _trees(first: int, last: int) -> tuple[BracketTree, ...]:
    if first == last:
        return (Leaf(first),)
    out = []
    for split in range(first, last):
        for left in _trees(first, split):
            for right in _trees(split + 1, last):
                out.append(Node(left, right))
    return tuple(out)
